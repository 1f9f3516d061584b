"""Command-line front end.

Every subcommand maps to one orchestrator call. Results go to stdout (plain
text, or the full response as JSON with ``--json``); logs and errors go to
stderr. The process exit code is the response's ``exit_code``.
"""
import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

from src.shared.config import settings
from src.shared.constants import ExitCodes, JSONConfig, VersionInfo
from src.shared.logging_config import configure_from_settings
from src.tools.lattice_tools import LatticeToolsOrchestrator
from src.tools.topology_io.application.services import preset_names

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with the input-error exit code."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(ExitCodes.INPUT_ERROR, f"{self.prog}: error: {message}\n")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="print the full response as JSON")


def _add_pair(parser: argparse.ArgumentParser, what: str) -> None:
    parser.add_argument("--source", required=True, help=f"{what} of N: file, inline JSON or preset")
    parser.add_argument("--target", required=True, help=f"{what} of M: file, inline JSON or preset")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="lattice-covers",
        description="Isometric embeddings d·I_N ↪ I_M of intersection forms and the "
                    "branched-covering degrees they guarantee.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VersionInfo.TOOL_VERSION}")
    parser.add_argument("--log-level", default=None, help="override LATTICE_COVERS_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="rank, signature, parity and unimodularity of a Gram matrix")
    p.add_argument("--gram", required=True, help="Gram or framed-link payload (file or inline JSON)")
    _add_common(p)

    p = sub.add_parser("normal-form", help="Serre normal form of a form")
    p.add_argument("--form", required=True, help="invariants, Gram payload or preset expression")
    _add_common(p)

    p = sub.add_parser("decide", help="which degrees d admit d·I_N ↪ I_M, and covering consequences")
    _add_pair(p, "form")
    p.add_argument("--degree", type=int, default=None)
    p.add_argument(
        "--assume-no-1-3-handles", dest="assume_no_13_handles", action="store_true",
        help="assert that N has a handle decomposition without 1- and 3-handles",
    )
    _add_common(p)

    p = sub.add_parser("embed", help="explicit embedding between Serre normal forms")
    _add_pair(p, "form")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("-o", "--output", default=None, help="write the embedding payload to this file")
    _add_common(p)

    p = sub.add_parser("verify", help="check an embedding certificate")
    p.add_argument("embedding", help="embedding payload (file or inline JSON)")
    _add_common(p)

    p = sub.add_parser("search", help="oracle search: vectors of a norm, frames, or embeddings")
    p.add_argument("--gram", default=None, help="definite Gram matrix for vector/frame search")
    p.add_argument("--norm", type=int, default=None)
    p.add_argument("--frame", type=int, default=None, help="size of an orthogonal frame to find")
    p.add_argument("--source", default=None, help="source Gram matrix for embedding search")
    p.add_argument("--target", default=None, help="target Gram matrix for embedding search")
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--bound", type=int, default=None,
                   help=f"coordinate box for indefinite targets (default {settings.oracle_default_bound})")
    p.add_argument("-o", "--output", default=None, help="write a found embedding to this file")
    _add_common(p)

    p = sub.add_parser("from-link", help="intersection form of a framed link")
    p.add_argument("link", help="framed-link payload or preset expression")
    _add_common(p)

    p = sub.add_parser("preset", help="invariants of a named manifold or connected sum")
    p.add_argument("name", nargs="?", default=None,
                   help=f"e.g. K3#2CP2bar; known: {', '.join(preset_names())}")
    _add_common(p)

    sub.add_parser("serve", help="run the MCP server on stdio")
    return parser


def _dispatch(args: argparse.Namespace, orchestrator: LatticeToolsOrchestrator) -> Dict[str, Any]:
    if args.command == "classify":
        return orchestrator.classify(args.gram)
    if args.command == "normal-form":
        return orchestrator.normal_form(args.form)
    if args.command == "decide":
        return orchestrator.decide(args.source, args.target, args.degree, args.assume_no_13_handles)
    if args.command == "embed":
        return orchestrator.embed(args.source, args.target, args.degree, args.output)
    if args.command == "verify":
        return orchestrator.verify(args.embedding)
    if args.command == "from-link":
        return orchestrator.from_link(args.link)
    if args.command == "preset":
        if args.name is None:
            names = preset_names()
            return {"success": True, "data": {"presets": names}, "message": "\n".join(names),
                    "exit_code": ExitCodes.OK}
        return orchestrator.preset(args.name)
    return _dispatch_search(args, orchestrator)


def _dispatch_search(args: argparse.Namespace, orchestrator: LatticeToolsOrchestrator) -> Dict[str, Any]:
    if args.gram is not None:
        if args.norm is None:
            return _usage_error("search --gram needs --norm")
        return orchestrator.search_vectors(args.gram, args.norm, args.frame)
    if args.source is None or args.target is None or args.degree is None:
        return _usage_error("search needs either --gram/--norm or --source/--target/--degree")
    return orchestrator.search_embedding(args.source, args.target, args.degree, args.bound, args.output)


def _usage_error(message: str) -> Dict[str, Any]:
    return {
        "success": False,
        "error": message,
        "error_type": "UsageError",
        "message": message,
        "exit_code": ExitCodes.INPUT_ERROR,
    }


def _emit(response: Dict[str, Any], as_json: bool) -> None:
    if as_json:
        print(json.dumps(response, indent=JSONConfig.INDENT, ensure_ascii=JSONConfig.ENSURE_ASCII))
        return
    if response.get("success"):
        print(response["message"])
        if "output_file" in response:
            print(f"written to {response['output_file']}")
    else:
        print(f"error: {response['message']}", file=sys.stderr)


def _serve() -> int:
    from src.presentation.mcp_server import LatticeCoversMCPServer

    logger.info(f"Starting {settings.server_name} v{settings.server_version}")
    try:
        LatticeCoversMCPServer().get_mcp_app().run()
    except KeyboardInterrupt:
        logger.info("Server stopped by user")
    return ExitCodes.OK


def run_command(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv``, run the subcommand, print its result and return the exit code."""
    parser = build_parser()
    args = parser.parse_args(list(argv) if argv is not None else None)
    configure_from_settings(args.log_level)

    if args.command == "serve":
        return _serve()

    orchestrator = LatticeToolsOrchestrator()
    try:
        response = _dispatch(args, orchestrator)
    except Exception as e:
        logger.critical(f"Unhandled error in {args.command}: {e}", exc_info=True)
        response = {
            "success": False,
            "error": str(e),
            "error_type": type(e).__name__,
            "message": f"internal error: {e}",
            "exit_code": ExitCodes.INTERNAL_ERROR,
        }
    _emit(response, args.json)
    return response["exit_code"]


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run_command(argv))


if __name__ == "__main__":
    main()
