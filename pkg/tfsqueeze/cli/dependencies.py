"""
Dependencies for the command line.
Provides the shared AnalysisService instance.
"""

from typing import Optional

from tfsqueeze.core.services.analysis_service import AnalysisService

# Global instance
_analysis_service: Optional[AnalysisService] = None


def get_analysis_service() -> AnalysisService:
    """Get or create the AnalysisService instance."""
    global _analysis_service
    if _analysis_service is None:
        _analysis_service = AnalysisService()
    return _analysis_service


def reset_analysis_service() -> None:
    """Drop the shared instance (a new one picks up the current directory's .env)."""
    global _analysis_service
    _analysis_service = None
