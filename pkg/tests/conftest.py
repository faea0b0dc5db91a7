import sys
from pathlib import Path

# allow "import oracles" from any test module
sys.path.insert(0, str(Path(__file__).parent))
