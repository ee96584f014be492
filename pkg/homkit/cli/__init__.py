from .main import run_cli, main
