import argparse
import logging
import sys

from . import checks
from .commands import COMMANDS, RunConfig
from .config import Config
from .errors import ZetaError
from .report import FORMATS

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chamberzeta",
        description="Exact chamber zeta function of the quotient of the A2 building by PGL3(Fq[t]).",
    )
    parser.add_argument("--env-file", default=".env", help="settings file (default: .env)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, q_default="2"):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--q", default=q_default, help="'sym' or an integer >= 2")
        p.add_argument("--format", default="json", choices=FORMATS)
        p.add_argument("--workers", default=None, help="process pool size (default: ZETA_WORKERS)")
        return p

    p = add("counts", "N_n by enumeration, trace and closed form")
    p.add_argument("--max-n", default="6")

    p = add("zeta", "closed form against exp of the traces")
    p.add_argument("--order", default="6")

    p = add("det", "det M_{k,N} by block matrix, weight table and Schur complement")
    p.add_argument("--k", default="1")
    p.add_argument("--width", default="1")
    p.add_argument("--order", default=None)

    p = add("euler", "truncated Euler product over primitive classes")
    p.add_argument("--length", default="6")
    p.add_argument("--order", default=None)

    p = add("galleries", "closed galleries of one length")
    p.add_argument("--length", default="3")
    p.add_argument("--list", dest="list_classes", action="store_true")

    p = add("verify", "every cross-check for a list of q", q_default="2,sym")
    p.add_argument("--order", default="9")

    return parser


def build_run_config(args: argparse.Namespace, config: Config) -> tuple:
    """
    Turn parsed arguments into a RunConfig

    Returns:
        Tuple of (is_valid: bool, run_config: RunConfig or None, error_message: str or None)
    """
    if args.command == "verify":
        is_valid, q_modes, error = checks.check_q_list(args.q)
    else:
        is_valid, q_mode, error = checks.check_q(args.q)
        q_modes = [q_mode]
    if not is_valid:
        return False, None, error

    cfg = RunConfig(
        command=args.command,
        q_modes=q_modes,
        format=args.format,
        list_classes=getattr(args, "list_classes", False),
        workers=config.WORKERS,
        block_max_symbolic=config.VERIFY_BLOCK_MAX_SYMBOLIC,
        block_max_numeric=config.VERIFY_BLOCK_MAX_NUMERIC,
        euler_max_length=config.VERIFY_EULER_MAX_LENGTH,
    )

    minimums = {"max_n": 1, "length": 1, "k": 1, "width": 1,
                "order": 1 if args.command == "verify" else 0, "workers": 1}
    for name, minimum in minimums.items():
        raw = getattr(args, name, None)
        if raw is None:
            continue
        is_valid, value, error = checks.check_positive(raw, minimum, "--" + name.replace("_", "-"))
        if not is_valid:
            return False, None, error
        setattr(cfg, name, value)

    if cfg.command == "euler" and cfg.order is not None and cfg.order > cfg.length:
        return False, None, f"--order {cfg.order} exceeds --length {cfg.length}"

    return True, cfg, None


def main(argv=None) -> int:
    """Run one command; returns 0 on success, 1 on a failed check, 2 on bad input."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_BAD_INPUT

    try:
        config = Config(args.env_file)
    except ValueError as e:
        print(e, file=sys.stderr)
        return EXIT_BAD_INPUT

    is_valid, cfg, error = build_run_config(args, config)
    if not is_valid:
        logger.error(f"Invalid input: {error}")
        print(f"❌ {error}", file=sys.stderr)
        return EXIT_BAD_INPUT

    logger.info(f"Running {cfg.command} at q={','.join(m.label for m in cfg.q_modes)}")
    try:
        report = COMMANDS[cfg.command](cfg)
    except ZetaError as e:
        logger.error(f"Error in {cfg.command} command: {e}")
        return EXIT_CHECK_FAILED

    print(report.render(cfg.format))
    logger.info(f"{cfg.command} finished: {'ok' if report.ok else 'checks failed'}")
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
