import sys
from pathlib import Path

# Let the oracle helpers import as a plain module regardless of rootdir.
sys.path.insert(0, str(Path(__file__).parent))
