"""
Services for tfsqueeze.
"""

from .analysis_service import AnalysisService, TransformReport

__all__ = ["AnalysisService", "TransformReport"]
