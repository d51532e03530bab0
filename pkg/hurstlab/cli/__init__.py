from hurstlab.cli.app import app

__all__ = ["app"]
