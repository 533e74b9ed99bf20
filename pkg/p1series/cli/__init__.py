from p1series.cli.main import HANDLERS, main
from p1series.cli.parser import CommandRequest, build_parser, parse_rational

__all__ = ["main", "HANDLERS", "CommandRequest", "build_parser", "parse_rational"]
