import argparse
import logging
import os
import sys

from bigtrader.common.backtest_report import BacktestReport
from bigtrader.common.enums import DebugLevel, StrategyKind
from bigtrader.common.errors import BigTraderError, DegenerateRatioError
from bigtrader.common.estimator_state import EstimatorConfig
from bigtrader.common.model_params import ModelParams
from bigtrader.common.price_series import PriceSeries
from bigtrader.common.run_config import RunConfig
from bigtrader.common.simulated_series import NoiseSpec, SimulatedSeries, TrueStrengthPath
from bigtrader.common.strength_series import StrengthSeries
from bigtrader.controllers.estimator_controller import EstimatorController
from bigtrader.engine import BacktestEngine
from bigtrader.utils.helpers import read_json_file, write_csv_file, write_json_file
from bigtrader.utils.loaders import load_path_segments, load_prices, load_universe
from bigtrader.utils.report import emit_report
from bigtrader.utils.simulate import calibrate_sigma, estimation_overlay, expand_path, signal_noise_ratio, simulate
import bigtrader.config as config
from pydantic import ValidationError
from wrapper.version import version


def strategy_list(text: str) -> list[StrategyKind]:
    try:
        return [StrategyKind(name.strip().lower()) for name in text.split(',') if name.strip()]
    except ValueError:
        choices: str = ', '.join(kind.value for kind in StrategyKind)
        raise argparse.ArgumentTypeError(f'"{text}" is not a comma separated list of {choices}')


def add_model_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--n', action='store', type=int, default=config.MODEL_WINDOW, dest='n',
                        help='Days in the moving mean behind the mood index (default: %(default)s)')
    parser.add_argument('--w', action='store', type=float, default=config.MEMBERSHIP_WIDTH, dest='w',
                        help='Width of the excess demand breakpoints (default: %(default)s)')
    parser.add_argument('--lam', action='store', type=float, default=config.FORGETTING_FACTOR, dest='lam',
                        help='Forgetting factor of the estimator, strictly between 0 and 1 (default: %(default)s)')
    parser.add_argument('--gamma', action='store', type=float, default=config.INITIAL_COVARIANCE, dest='gamma',
                        help='Initial covariance scale of the estimator (default: %(default)s)')


def build_parser() -> argparse.ArgumentParser:
    # Setup Primary Parser
    par = argparse.ArgumentParser(prog='bigtrader',
                                  description='Estimate big buyer / big seller strengths and backtest the strategies '
                                              'that follow them.')

    par.add_argument('--debug', '-d', action='store', type=int, default=0, dest='debug',
                     help=f'Debug level, 0 (none) to {len(DebugLevel) - 1} (engine); higher levels log more '
                          '(default: 0)')

    par.add_argument('--quiet', '-q', action='store_true', default=False, dest='quiet',
                     help='Only log warnings and hide the progress bar')

    # Create Subparsers
    spar = par.add_subparsers(title='Commands', dest='command')

    # Simulate Subparser
    sim_subpar = spar.add_parser('simulate', aliases=['s'],
                                 help='Simulates a price series from a strength path and estimates it back')
    noise_group = sim_subpar.add_mutually_exclusive_group()
    noise_group.add_argument('--sigma', action='store', type=float, default=None, dest='sigma',
                             help=f'Noise standard deviation (default: {config.SIMULATION_SIGMA})')
    noise_group.add_argument('--target-snr', action='store', type=float, default=None, dest='target_snr',
                             help='Choose sigma so the run measures this signal-to-noise ratio')
    sim_subpar.add_argument('--days', action='store', type=int, default=config.SIMULATION_DAYS, dest='days',
                            help='Number of simulated days (default: %(default)s)')
    sim_subpar.add_argument('--seed', action='store', type=int, default=config.SIMULATION_SEED, dest='seed',
                            help='Seed of the noise generator (default: %(default)s)')
    sim_subpar.add_argument('--path', action='store', type=str, default=None, dest='path',
                            help='CSV file of start_day,a6,a7 segments (default: a built-in three segment path)')
    sim_subpar.add_argument('--initial-price', action='store', type=float, default=config.SIMULATION_INITIAL_PRICE,
                            dest='initial_price', help='Every starting price (default: %(default)s)')
    sim_subpar.add_argument('--smoothing', action='store', type=int, default=config.FOLLOW_BB_SMOOTHING,
                            dest='smoothing', help='Moving average length of the overlay (default: %(default)s)')
    sim_subpar.add_argument('--out', action='store', type=str, default=config.RESULTS_DIR, dest='out',
                            help='Output directory (default: %(default)s)')
    add_model_arguments(sim_subpar)

    # Estimate Subparser
    est_subpar = spar.add_parser('estimate', aliases=['e'], help='Estimates the strengths behind a price file')
    est_subpar.add_argument('--prices', action='store', type=str, required=True, dest='prices',
                            help='CSV file of date,adj_close rows')
    est_subpar.add_argument('--smoothing', action='store', type=int, default=config.FOLLOW_BB_SMOOTHING,
                            dest='smoothing', help='Moving average length of the smoothed columns (default: %(default)s)')
    est_subpar.add_argument('--out', action='store', type=str, default=config.RESULTS_DIR, dest='out',
                            help='Output directory (default: %(default)s)')
    add_model_arguments(est_subpar)

    # Backtest Subparser
    bt_subpar = spar.add_parser('backtest', aliases=['b'],
                                help='Backtests the strategies over a universe of stocks')
    bt_subpar.add_argument('--universe', action='store', type=str, required=True, dest='universe',
                           help='CSV file of symbol,name,weight rows')
    bt_subpar.add_argument('--prices', action='store', type=str, required=True, dest='prices',
                           help='Directory holding one <symbol>.csv price file per stock')
    bt_subpar.add_argument('--strategy', action='store', type=strategy_list, dest='strategies',
                           default=list(config.DEFAULT_STRATEGIES),
                           help='Comma separated strategies out of followbb, ridemood and buyhold (default: all)')
    bt_subpar.add_argument('--length', action='store', type=int, default=config.INTERVAL_LENGTH, dest='length',
                           help='Trading days per test interval (default: %(default)s)')
    bt_subpar.add_argument('--stride', action='store', type=int, default=config.INTERVAL_STRIDE, dest='stride',
                           help='Trading days between interval starts (default: %(default)s)')
    bt_subpar.add_argument('--buy-cost', action='store', type=float, default=config.BUY_COST_RATE, dest='buy_rate',
                           help='Cost of a buy as a fraction of the amount (default: %(default)s)')
    bt_subpar.add_argument('--sell-cost', action='store', type=float, default=config.SELL_COST_RATE, dest='sell_rate',
                           help='Cost of a sell as a fraction of the amount (default: %(default)s)')
    bt_subpar.add_argument('--initial-money', action='store', type=float, default=config.INITIAL_MONEY,
                           dest='initial_money', help='Money split across the universe by weight (default: %(default)s)')
    bt_subpar.add_argument('--top', action='store', type=int, default=config.RANKING_TOP, dest='top',
                           help='Winners and losers listed per strategy (default: %(default)s)')
    bt_subpar.add_argument('--paper-defaults', '--reference-defaults', action='store_true', default=False,
                           dest='reference_defaults',
                           help='Pin n, w, lam, gamma, the interval plan, the costs and the initial money to their '
                                'defaults, ignoring the flags that set them')
    bt_subpar.add_argument('--out', action='store', type=str, default=config.RESULTS_DIR, dest='out',
                           help='Output directory (default: %(default)s)')
    add_model_arguments(bt_subpar)

    # Report Subparser
    rep_subpar = spar.add_parser('report', aliases=['r'], help='Rewrites the report tables from a saved results.json')
    rep_subpar.add_argument('--results', action='store', type=str, default=config.RESULTS_DIR, dest='results',
                            help='Directory holding results.json (default: %(default)s)')
    rep_subpar.add_argument('--top', action='store', type=int, default=config.RANKING_TOP, dest='top',
                            help='Winners and losers listed per strategy (default: %(default)s)')
    rep_subpar.add_argument('--out', action='store', type=str, default=None, dest='out',
                            help='Output directory (default: the results directory)')

    # Version Subparser
    spar.add_parser('version', aliases=['ver'], help='Prints the current version of the launcher')

    return par


def run_simulate(args: argparse.Namespace) -> None:
    params: ModelParams = ModelParams(args.n, args.w)
    estimator_config: EstimatorConfig = EstimatorConfig(args.lam, args.gamma)

    if args.path is not None:
        segments: list[tuple[int, float, float]] = load_path_segments(args.path)
    else:
        segments = [segment for segment in config.SIMULATION_PATH if segment[0] < args.days]
    path: TrueStrengthPath = expand_path(segments, args.days)
    initial_prices: list[float] = [args.initial_price] * params.n

    sigma: float = config.SIMULATION_SIGMA if args.sigma is None else args.sigma
    if args.target_snr is not None:
        sigma = calibrate_sigma(params, path, args.target_snr, args.seed, args.days, initial_prices)
        logging.info(f'Calibrated sigma {sigma:.6g} for a signal-to-noise ratio of {args.target_snr}')

    series: SimulatedSeries = simulate(params, path, NoiseSpec(sigma, args.seed), args.days, initial_prices)
    try:
        ratio: float | None = signal_noise_ratio(series)
    except DegenerateRatioError as e:
        logging.warning(str(e))
        ratio = None

    write_csv_file(series.to_frame(), os.path.join(args.out, config.SIMULATED_FILE_NAME))
    write_csv_file(estimation_overlay(series, params, estimator_config, args.smoothing),
                   os.path.join(args.out, config.OVERLAY_FILE_NAME))
    write_json_file({
        'days': args.days,
        'sigma': sigma,
        'seed': args.seed,
        'target_snr': args.target_snr,
        'signal_noise_ratio': ratio,
        'model': params.to_json(),
        'estimator': estimator_config.to_json(),
        'path': [list(segment) for segment in segments],
    }, os.path.join(args.out, config.SIMULATION_FILE_NAME))
    logging.info(f'Simulated {args.days} days, signal-to-noise ratio {ratio}')


def run_estimate(args: argparse.Namespace) -> None:
    prices: PriceSeries = load_prices(args.prices)
    estimator: EstimatorController = EstimatorController(EstimatorConfig(args.lam, args.gamma))
    strengths: StrengthSeries = estimator.estimate_series(prices, ModelParams(args.n, args.w))
    write_csv_file(strengths.to_frame(args.smoothing), os.path.join(args.out, config.STRENGTHS_FILE_NAME))
    logging.info(f'Estimated {prices.symbol} over {len(prices)} days')


def run_backtest(args: argparse.Namespace) -> None:
    run_config: RunConfig = RunConfig(n=args.n, w=args.w, lam=args.lam, gamma=args.gamma, strategies=args.strategies,
                                      interval_length=args.length, stride=args.stride, buy_rate=args.buy_rate,
                                      sell_rate=args.sell_rate, initial_money=args.initial_money,
                                      universe_path=args.universe, prices_dir=args.prices, output_dir=args.out)
    if args.reference_defaults:
        run_config = run_config.with_reference_defaults()

    universe = load_universe(args.universe)
    prices: dict[str, PriceSeries] = {}
    for entry in universe:
        prices[entry.symbol] = load_prices(os.path.join(args.prices, f'{entry.symbol}.csv'), entry.symbol)

    report: BacktestReport = BacktestEngine(run_config, quiet_mode=args.quiet).run(universe, prices)
    emit_report(report, args.out, args.top)
    logging.info(f'Backtested {len(universe)} stocks into {args.out}')


def run_report(args: argparse.Namespace) -> None:
    report: BacktestReport = BacktestReport().from_json(
        read_json_file(os.path.join(args.results, config.RESULTS_FILE_NAME)))
    out: str = args.out if args.out is not None else args.results
    emit_report(report, out, args.top)
    logging.info(f'Rewrote the report in {out}')


def cli_main(argv: list[str] | None = None) -> int:
    par: argparse.ArgumentParser = build_parser()
    try:
        par_args: argparse.Namespace = par.parse_args(argv)
    except SystemExit as e:
        # argparse exits 0 after --help and 2 on a usage error
        return e.code if isinstance(e.code, int) else 2

    logging.basicConfig(format=config.LOG_FORMAT, force=True,
                        level=logging.DEBUG if par_args.debug > 0 else
                        logging.WARNING if par_args.quiet else logging.INFO)
    # levels are taken by position: 0 is NONE, the last is ENGINE
    levels: list[DebugLevel] = list(DebugLevel)
    if not 0 <= par_args.debug < len(levels):
        logging.error(f"--debug must be between 0 and {len(levels) - 1}")
        return 2
    config.Debug.level = levels[par_args.debug]

    # Main Action variable
    action: str | None = par_args.command

    try:
        if action in ['simulate', 's']:
            run_simulate(par_args)
        elif action in ['estimate', 'e']:
            run_estimate(par_args)
        elif action in ['backtest', 'b']:
            run_backtest(par_args)
        elif action in ['report', 'r']:
            run_report(par_args)
        elif action in ['version', 'ver']:
            print(version)
        else:
            # Print help if no command is passed
            print("\nLooks like you didn't tell the launcher what to do!"
                  + "\nHere's the basic commands in case you've forgotten.\n")
            par.print_help()
            return 2
    except (BigTraderError, OSError, ValidationError, ValueError) as e:
        logging.error(f'{action} failed: {e}')
        return 1

    return 0


if __name__ == '__main__':
    sys.exit(cli_main(sys.argv[1:]))
