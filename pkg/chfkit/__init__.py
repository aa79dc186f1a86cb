"""Critical heat flux prediction for internally heated annuli."""

from .config import RunConfig, SystemConfig
from .orchestrator import PipelineOrchestrator, build_default_orchestrator
from .stages import PipelineState

__all__ = ["PipelineOrchestrator", "PipelineState", "RunConfig", "SystemConfig", "build_default_orchestrator"]
