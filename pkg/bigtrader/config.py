import os

from bigtrader.common.enums import *

"""
This file is important for configuring settings for the project. All parameters in this file have comments to explain
what they do already. Refer to this file to clear any confusion, and make any changes as necessary.

Every default here is the value used for the Hong Kong experiments; the launcher's --reference-defaults flag pins all of
them at once.
"""

# Model settings -------------------------------------------------------------------------------------------------------
MODEL_WINDOW = 3                                    # n: days in the moving mean behind the mood index
MEMBERSHIP_WIDTH = 0.01                             # w: width of the excess demand breakpoints, log-price units

# Estimator settings ---------------------------------------------------------------------------------------------------
FORGETTING_FACTOR = 0.95                            # lambda, open interval (0, 1)
INITIAL_COVARIANCE = 10.0                           # gamma, P0 = gamma * I

# Strategy settings ----------------------------------------------------------------------------------------------------
FOLLOW_BB_SMOOTHING = StrategyKind.FOLLOW_BB.smoothing     # moving average length used by FollowBB
RIDE_MOOD_SMOOTHING = StrategyKind.RIDE_MOOD.smoothing     # moving average length used by RideMood
DEFAULT_STRATEGIES = [StrategyKind.FOLLOW_BB, StrategyKind.RIDE_MOOD, StrategyKind.BUY_HOLD]

# Backtest settings ----------------------------------------------------------------------------------------------------
INTERVAL_LENGTH = 492                               # trading days per test interval (roughly two years)
INTERVAL_STRIDE = 5                                 # trading days between consecutive interval starts
INTERVAL_YEARS = 2                                  # fixed divisor when annualizing an interval's return
BUY_COST_RATE = 0.00108                             # stamp duty + levy + trading fee on the buy side
SELL_COST_RATE = 0.00288                            # the same plus brokerage on the sell side
INITIAL_MONEY = 100.0                               # IM, split across the universe by index weight

# Simulation settings --------------------------------------------------------------------------------------------------
SIMULATION_INITIAL_PRICE = 10.0                     # p_{-2} = p_{-1} = p_0
SIMULATION_DAYS = 600
SIMULATION_SIGMA = 0.02
SIMULATION_SEED = 1
CALIBRATION_SIGMA_BOUNDS = (1e-4, 1.0)              # search range when solving for a target signal-to-noise ratio
CALIBRATION_ITERATIONS = 40
SIMULATION_PATH = [(0, 0.0, 0.2), (200, 0.2, 0.0), (400, 0.1, 0.1)]   # (start_day, a6, a7) used when no path file is given

# Runtime settings -----------------------------------------------------------------------------------------------------
TQDM_BAR_FORMAT = "Backtesting {n_fmt}/{total_fmt} stocks at {rate_fmt} "   # how TQDM displays the bar
TQDM_UNITS = " stocks"                                                      # units TQDM takes in the bar
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
FLOAT_FORMAT = '%.12g'                              # enough digits for values to survive a CSV round trip

# Output settings ------------------------------------------------------------------------------------------------------
RESULTS_DIR = os.path.join(os.getcwd(), "results")              # default output directory
RESULTS_FILE_NAME = "results.json"                              # raw backtest output, re-rendered by `report`
RUN_CONFIG_FILE_NAME = "run_config.json"
STOCK_STATS_FILE_NAME = "stock_stats.csv"
PORTFOLIO_STATS_FILE_NAME = "portfolio_stats.csv"
INTERVAL_RETURNS_FILE_NAME = "interval_returns.csv"
VALUATIONS_FILE_NAME = "valuations.csv"
CYCLES_FILE_NAME = "cycles.csv"
LAST_INTERVAL_FILE_NAME = "last_interval_cycles.csv"            # last test interval cycles plus summary rows
RANKINGS_FILE_NAME = "rankings.csv"
STRENGTHS_FILE_NAME = "strengths.csv"
SIMULATED_FILE_NAME = "simulated.csv"
OVERLAY_FILE_NAME = "overlay.csv"
SIMULATION_FILE_NAME = "simulation.json"
PORTFOLIO_SYMBOL = "PORTFOLIO"                                  # symbol column value for portfolio rows
RANKING_TOP = 5                                                 # winners and losers listed per strategy


class Debug:                    # Keeps track of the current debug level of the backtester
    level = DebugLevel.NONE
