import logging

from django.conf import settings
from django.core.management.base import CommandError

from cellcrystals.cli.base import CHECK_FAILURE, CrystalCommand
from cellcrystals.cli.config import dumps, write_output
from cellcrystals.cli.suites import SUITES, run_suites
from cellcrystals.epsstar.tasks import fan_out_scan

from .trace_example import render_trace

logger = logging.getLogger(__name__)


class Command(CrystalCommand):
    help = (
        "Run the verification suites for a Cartan datum:\n\n"
        "  morphism      braid maps are crystal morphisms on every legal window\n"
        "  inverse       the braid maps and moves undo each other\n"
        "  oracle        eps* by braid moves equals the closed formula\n"
        "  unit          only zero has wt = 0 and eps* = 0 (needs --unit-box)\n"
        "  independence  two different A3 scripts give the same eps*_3\n\n"
        "Exit code 0 when everything passes, 1 on a failed check."
    )

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            "--suite",
            action="append",
            choices=SUITES,
            dest="suites",
            help="Suite to run, may be repeated (default: all)",
        )
        parser.add_argument("--samples", type=int, help="Samples for the oracle suite")
        parser.add_argument("--seed", type=int, help="Random seed (default: VERIFY_SEED)")
        parser.add_argument(
            "--radius",
            type=int,
            help="Sampling radius of the oracle suite (default: VERIFY_SAMPLE_RADIUS)",
        )
        parser.add_argument(
            "--cases",
            type=int,
            help="Cases per braid map (default: VERIFY_MORPHISM_CASES)",
        )
        parser.add_argument(
            "--unit-box",
            type=int,
            dest="unit_box",
            help="Radius N of the box [-N, N]^l scanned by the unit suite",
        )
        parser.add_argument(
            "--fan-out",
            action="store_true",
            dest="fan_out",
            default=None,
            help="Scan the unit box as a Celery group (default: VERIFY_FAN_OUT)",
        )
        parser.add_argument(
            "--trace-example",
            action="store_true",
            dest="trace_example",
            help="Print the worked rightmost script of this datum and exit",
        )

    def run(self, config, options):
        if options["trace_example"]:
            write_output(render_trace(config.datum, None, config.format), config.out, self.stdout)
            return

        def pick(name, setting):
            return options[name] if options[name] is not None else getattr(settings, setting)

        fan_out = pick("fan_out", "VERIFY_FAN_OUT")
        report = run_suites(
            config.datum,
            options["suites"] or SUITES,
            seed=pick("seed", "VERIFY_SEED"),
            samples=pick("samples", "VERIFY_SAMPLES"),
            sample_radius=pick("radius", "VERIFY_SAMPLE_RADIUS"),
            exhaustive_length=settings.VERIFY_EXHAUSTIVE_LENGTH,
            morphism_cases=pick("cases", "VERIFY_MORPHISM_CASES"),
            unit_box=options["unit_box"],
            scanner=fan_out_scan if fan_out else None,
        )

        if config.format == "json":
            text = dumps(report)
        else:
            lines = [f"{report['datum']} (seed {report['seed']})"]
            for name, result in report["suites"].items():
                if "skipped" in result:
                    status = f"skipped, {result['skipped']}"
                else:
                    status = "pass" if result["pass"] else "FAIL"
                lines.append(f"  {name:<13} {result['checked']:>8} checked  {status}")
            text = "\n".join(lines)
        write_output(text + "\n", config.out, self.stdout)

        if not report["pass"]:
            failed = [name for name, result in report["suites"].items() if not result["pass"]]
            raise CommandError(
                f"Verification failed: {', '.join(failed)}", returncode=CHECK_FAILURE
            )
        self.stderr.write(self.style.SUCCESS(f"All checks passed for {report['datum']}"))
