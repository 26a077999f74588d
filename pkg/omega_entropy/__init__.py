"""
omega-entropy: finite-sample entropy and channel-utilization bounds.
"""

__version__ = "0.1.0"
