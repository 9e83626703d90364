"""Rule-based engine and benchmark harness for gender-inclusive German."""

from .engine import Engine, EngineData, load_engine_data
from .rewrite import StylePreference, SuggestionItem, Toggles

__version__ = "0.1.0"

__all__ = ["Engine", "EngineData", "load_engine_data", "StylePreference",
           "SuggestionItem", "Toggles", "__version__"]
