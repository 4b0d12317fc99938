"""
tfsqueeze - time-reassigned synchrosqueezing and multisynchrosqueezing of
transient signals.
"""

__version__ = "1.0.1"
