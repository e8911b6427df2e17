import threading
import traceback


class Thread(threading.Thread):
    """
    `Thread Class Notes:`
        Threads are how the engine runs the cells of a backtest side by side. These Threads are built to catch errors.
        If an error is caught, its traceback is kept in ``error`` and the exception itself in ``exception`` so the
        engine can report it and raise it again once every thread has been joined.
    """
    def __init__(self, func, args):
        threading.Thread.__init__(self)
        self.args = args
        self.func = func
        self.result = None
        self.error: str | None = None
        self.exception: BaseException | None = None

    def run(self):
        try:
            self.result = self.func(*self.args)
        except Exception as e:
            self.error = traceback.format_exc()
            self.exception = e
