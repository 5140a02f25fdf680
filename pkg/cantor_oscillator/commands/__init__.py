# Commands package
from . import evaluate, approximant, variation, witness, cut, verify

__all__ = ["evaluate", "approximant", "variation", "witness", "cut", "verify"]
