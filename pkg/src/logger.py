import logging
import os
from datetime import datetime

from dotenv import load_dotenv

load_dotenv()

LOG_FILE = f"{datetime.now().strftime('%m_%d_%Y_%H_%M_%S')}.log"
logs_dir = os.getenv("BURNSIDE_LOG_DIR", os.path.join(os.getcwd(), "logs"))
os.makedirs(logs_dir, exist_ok=True)

LOG_FILE_PATH = os.path.join(logs_dir, LOG_FILE)

logging.basicConfig(
    filename=LOG_FILE_PATH,
    format="[ %(asctime)s ] %(lineno)d %(name)s - %(levelname)s - %(message)s",
    level=getattr(logging, os.getenv("BURNSIDE_LOG_LEVEL", "INFO").upper(), logging.INFO),
)
