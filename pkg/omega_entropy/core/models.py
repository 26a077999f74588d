"""
Result records rendered by the CLI.
"""

from dataclasses import dataclass, field, fields
from typing import Any, Dict, List, Optional
from enum import Enum


class OutputFormat(Enum):
    """Output format enumeration"""
    TABLE = "table"
    JSON = "json"
    CSV = "csv"


@dataclass
class ChannelReport:
    """Utilization bound, overhead bound and naive-framing comparison for one message size"""
    message_bits: int
    alphabet_size: int = 2
    unit: str = "bits"
    max_utilization: float = 0.0
    min_overhead: float = 0.0
    naive_payload_fraction: float = 0.0
    shannon_utilization: float = 0.0
    exceeds_naive_framing: bool = False
    negative_overhead: bool = False
    header_bits: Optional[int] = None
    real_overhead: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary, leaving out the header comparison when absent"""
        data = {f.name: getattr(self, f.name) for f in fields(self)}
        if self.header_bits is None:
            data.pop("header_bits")
            data.pop("real_overhead")
        return data


@dataclass
class AnalysisRecord:
    """Entropy analysis of one byte or bit stream"""
    source: str
    N: int
    M: int
    M_observed: int
    H_S_bits: float
    H_S_beans: float
    H_omega_bits: float
    H_omega_beans: float
    gap: float
    unit: str
    channel: Optional[ChannelReport] = field(repr=False, default=None)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a flat dictionary"""
        return {
            "source": self.source,
            "N": self.N,
            "M": self.M,
            "M_observed": self.M_observed,
            "H_S_bits": self.H_S_bits,
            "H_S_beans": self.H_S_beans,
            "H_omega_bits": self.H_omega_bits,
            "H_omega_beans": self.H_omega_beans,
            "gap": self.gap,
            "unit": self.unit,
            "max_utilization": self.channel.max_utilization,
            "min_overhead": self.channel.min_overhead,
            "naive_payload_fraction": self.channel.naive_payload_fraction,
            "shannon_utilization": self.channel.shannon_utilization,
            "exceeds_naive_framing": self.channel.exceeds_naive_framing,
            "negative_overhead": self.channel.negative_overhead,
        }


@dataclass
class ConvergeRow:
    """One sample size of the H_Ω → H_S convergence table"""
    N: int
    H_omega: float
    H_S: float
    gap: float
    gap_asymptotic: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "N": self.N,
            "H_omega": self.H_omega,
            "H_S": self.H_S,
            "gap": self.gap,
            "gap_asymptotic": self.gap_asymptotic,
        }


def records_to_dicts(records: List[Any]) -> List[Dict[str, Any]]:
    return [r.to_dict() for r in records]
