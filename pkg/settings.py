import os

import dotenv

# Load environment variables from .env file
_ = dotenv.load_dotenv()

FVS_MAX_VERTICES = int(os.getenv("GRAPHS_FVS_MAX_VERTICES", "24"))
ENUM_MAX_VERTICES = int(os.getenv("GRAPHS_ENUM_MAX_VERTICES", "12"))
ENUM_MAX_VERTICES_GIRTH5 = int(os.getenv("GRAPHS_ENUM_MAX_VERTICES_GIRTH5", "14"))
FAMILY_MAX_VERTICES = int(os.getenv("GRAPHS_FAMILY_MAX_VERTICES", "20"))

VERIFY_WORKERS = int(os.getenv("GRAPHS_VERIFY_WORKERS", "1"))

LOG_LEVEL = os.getenv("GRAPHS_LOG_LEVEL", "WARNING").upper()
LOG_FILE = os.getenv("GRAPHS_LOG_FILE", "")
TRACE_CONSOLE = os.getenv("GRAPHS_TRACE_CONSOLE", "false").lower() == "true"
