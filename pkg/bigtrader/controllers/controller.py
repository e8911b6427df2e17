import logging

from bigtrader.common.enums import DebugLevel
from bigtrader.config import Debug


class Controller:
    """
    `Controller Class Notes:`

        This is a super class for every controller type. Controllers hold the per-day logic of the backtester: the
        estimator recursion, the strategy state machines and the daily valuation. The objects they work on live in
        ``bigtrader.common``.

        Debug output goes through ``debug``, which only logs when ``config.Debug.level`` is at least the controller's
        ``debug_level``.
    """

    def __init__(self):
        self.debug_level: DebugLevel = DebugLevel.CONTROLLER
        self.logger: logging.Logger = logging.getLogger(self.__class__.__module__)

    def debug(self, *args) -> None:
        if Debug.level >= self.debug_level:
            for arg in args:
                self.logger.debug(f'{self.__class__.__name__}: {arg}')
