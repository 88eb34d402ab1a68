
"""
    Log Util
    ~~~~~~~~

    Lines are written to stderr; stdout is reserved for reports.
"""

import sys

from dimsdk import DateTime


def current_time() -> str:
    return str(DateTime.now())


DEBUG_FLAG = 0x01
INFO_FLAG = 0x02
WARNING_FLAG = 0x04
ERROR_FLAG = 0x08


class Log:

    DEBUG = 0xFF    # 0000 1111 : debug(), info(), warning(), error()
    DEVELOP = 0xFE  # 0000 1110 :          info(), warning(), error()
    RELEASE = 0xFC  # 0000 1100 :                  warning(), error()

    LEVEL = RELEASE

    @classmethod
    def _print(cls, tag: str, msg: str):
        print('[%s] %s | %s' % (current_time(), tag, msg), file=sys.stderr)

    @classmethod
    def debug(cls, msg: str):
        if cls.LEVEL & DEBUG_FLAG == 0:
            return None
        cls._print(tag=' DEBUG ', msg=msg)

    @classmethod
    def info(cls, msg: str):
        if cls.LEVEL & INFO_FLAG == 0:
            return None
        cls._print(tag='       ', msg=msg)

    @classmethod
    def warning(cls, msg: str):
        if cls.LEVEL & WARNING_FLAG == 0:
            return None
        cls._print(tag='WARNING', msg=msg)

    @classmethod
    def error(cls, msg: str):
        if cls.LEVEL & ERROR_FLAG == 0:
            return None
        cls._print(tag=' ERROR ', msg=msg)


class Logging:
    """ Mixin: prefix messages with the class name (and an optional subsystem tag) """

    LOG_TAG: str = None

    def __prefix(self) -> str:
        tag = self.LOG_TAG
        name = self.__class__.__name__
        return name if tag is None else '%s %s' % (tag, name)

    def debug(self, msg: str):
        Log.debug(msg='%s >\t%s' % (self.__prefix(), msg))

    def info(self, msg: str):
        Log.info(msg='%s >\t%s' % (self.__prefix(), msg))

    def warning(self, msg: str):
        Log.warning(msg='%s >\t%s' % (self.__prefix(), msg))

    def error(self, msg: str):
        Log.error(msg='%s >\t%s' % (self.__prefix(), msg))
