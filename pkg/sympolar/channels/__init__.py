"""
Bosonic Gaussian channel triples and their canonical forms.
"""

from .gaussian import (
    ChannelClassification,
    ChannelNormalForm,
    ChannelValidity,
    GaussianChannelTriple,
    ParameterCounts,
    classify_channel,
    compose,
    identity_channel,
    normal_form,
    parameter_counts,
    symplectic_channel,
    validate_channel,
)
from .williamson import WilliamsonForm, williamson

__all__ = [
    "ChannelClassification",
    "ChannelNormalForm",
    "ChannelValidity",
    "GaussianChannelTriple",
    "ParameterCounts",
    "WilliamsonForm",
    "classify_channel",
    "compose",
    "identity_channel",
    "normal_form",
    "parameter_counts",
    "symplectic_channel",
    "validate_channel",
    "williamson",
]
