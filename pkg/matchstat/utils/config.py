
import os
from configparser import ConfigParser
from typing import Optional, List

from dimsdk import Dictionary


class Config(Dictionary):
    """ Config info from ini file """

    def get_string(self, section: str, option: str) -> Optional[str]:
        sub = self.get(section)
        if sub is not None:
            return sub.get(option)

    def get_integer(self, section: str, option: str, default: int = 0) -> int:
        val = self.get_string(section=section, option=option)
        if val is None or len(val.strip()) == 0:
            return default
        return int(val)

    def get_float(self, section: str, option: str, default: float = 0.0) -> float:
        val = self.get_string(section=section, option=option)
        if val is None or len(val.strip()) == 0:
            return default
        return float(val)

    def get_list(self, section: str, option: str, separator: str = ',') -> List[str]:
        """ get str and separate to a list """
        text = self.get_string(section=section, option=option)
        if text is None:
            return []
        result = []
        array = text.split(separator)
        for item in array:
            string = item.strip()
            if len(string) > 0:
                result.append(string)
        return result

    #
    #   precision
    #

    @property
    def precision_bits(self) -> int:
        return self.get_integer(section='precision', option='bits', default=256)

    @property
    def ceiling_bits(self) -> int:
        return self.get_integer(section='precision', option='ceiling_bits', default=65536)

    @property
    def tolerance_bits(self) -> int:
        return self.get_integer(section='precision', option='tolerance_bits', default=100)

    #
    #   painleve
    #

    @property
    def hm_s_min(self) -> float:
        return self.get_float(section='painleve', option='s_min', default=-12.0)

    @property
    def hm_s_max(self) -> float:
        return self.get_float(section='painleve', option='s_max', default=10.0)

    @property
    def hm_npoints(self) -> int:
        return self.get_integer(section='painleve', option='npoints', default=8001)

    @property
    def hm_tol(self) -> float:
        return self.get_float(section='painleve', option='tol', default=1e-9)

    #
    #   quadrature
    #

    @property
    def nodes_per_unit(self) -> int:
        return self.get_integer(section='quadrature', option='nodes_per_unit', default=64)

    @property
    def quadrature_tolerance(self) -> float:
        return self.get_float(section='quadrature', option='tolerance', default=1e-8)

    #
    #   runtime
    #

    @property
    def threads(self) -> int:
        """ MATCHSTAT_THREADS overrides the ini value; 0 means all cores """
        env = os.environ.get('MATCHSTAT_THREADS')
        if env is not None and len(env.strip()) > 0:
            return int(env)
        return self.get_integer(section='runtime', option='threads', default=0)

    @property
    def verify_tgrid(self) -> Optional[List[float]]:
        """ None when unset, so each check keeps its own default grid """
        array = self.get_list(section='verify', option='tgrid')
        if len(array) == 0:
            return None
        return [float(item) for item in array]

    @classmethod
    def load(cls, file: str = None):
        if file is None:
            return cls(dictionary={})
        info = load_ini(file=file)
        return cls(dictionary=info)


def load_ini(file: str) -> dict:
    parser = ConfigParser()
    parser.read(file)
    # parse all sections
    info = {}
    sections = parser.sections()
    for sec in sections:
        array = parser.items(section=sec)
        if array is None or len(array) == 0:
            # options empty
            continue
        lines = {}
        for item in array:
            name = item[0]
            value = item[1]
            lines[name] = value
        info[sec] = lines
    return info
