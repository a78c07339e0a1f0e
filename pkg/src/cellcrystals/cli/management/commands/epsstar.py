import logging

from django.conf import settings
from django.core.management.base import CommandError

import numpy as np

from cellcrystals.cartan.words import longest_word
from cellcrystals.cli.base import CHECK_FAILURE, CrystalCommand
from cellcrystals.cli.config import dumps, write_output
from cellcrystals.crystals.elements import CrystalElement
from cellcrystals.epsstar.functions import eps_star_report

logger = logging.getLogger(__name__)


class Command(CrystalCommand):
    help = (
        "Compute eps_i^* of an element of the longest word crystal both by\n"
        "braid moves and by the closed formula, and flag any difference.\n\n"
        "With --samples, check that many seeded random elements instead."
    )

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_element_arguments(parser)
        parser.add_argument(
            "--samples",
            type=int,
            help="Number of random elements to check instead of a single element",
        )
        parser.add_argument("--seed", type=int, help="Random seed (default: VERIFY_SEED)")
        parser.add_argument(
            "--radius",
            type=int,
            help="Sample from [-radius, radius]^l (default: VERIFY_SAMPLE_RADIUS)",
        )

    def run(self, config, options):
        if config.samples is None:
            self.report_element(config)
        else:
            self.report_samples(config, options)

    def report_element(self, config):
        report = eps_star_report(config.element)
        if config.format == "json":
            text = dumps(report.as_dict())
        else:
            lines = [f"{config.datum.label} element {config.element}"]
            for entry in report.entries:
                flag = "" if entry.matches else "  MISMATCH"
                lines.append(
                    f"eps*_{entry.letter} = {entry.eps_star_alg} (algorithm) "
                    f"{entry.eps_star_formula} (formula), final word "
                    f"{entry.final_word}, {entry.script_length} moves{flag}"
                )
            text = "\n".join(lines)
        write_output(text + "\n", config.out, self.stdout)

        if not report.matches:
            raise CommandError(
                f"eps* mismatch for letters {list(report.mismatches)}",
                returncode=CHECK_FAILURE,
            )

    def report_samples(self, config, options):
        seed = options["seed"] if options["seed"] is not None else settings.VERIFY_SEED
        radius = (
            options["radius"]
            if options["radius"] is not None
            else settings.VERIFY_SAMPLE_RADIUS
        )
        word = longest_word(config.datum.family, config.datum.rank)
        logger.info(
            "Checking %d samples of %s from radius %d with seed %d",
            config.samples,
            config.datum.label,
            radius,
            seed,
        )

        rng = np.random.default_rng(seed)
        mismatches = []
        for z in rng.integers(-radius, radius + 1, size=(config.samples, len(word))):
            report = eps_star_report(CrystalElement(word, z.tolist()))
            if not report.matches:
                mismatches.append(
                    {"z": list(report.element.z), "letters": list(report.mismatches)}
                )

        summary = {
            "datum": config.datum.label,
            "samples": config.samples,
            "seed": seed,
            "radius": radius,
            "mismatch_count": len(mismatches),
            "mismatches": mismatches[:10],
            "match": not mismatches,
        }
        if config.format == "json":
            text = dumps(summary)
        elif mismatches:
            text = f"{len(mismatches)} of {config.samples} samples disagree"
        else:
            text = f"all match: {config.samples} samples of {config.datum.label}"
        write_output(text + "\n", config.out, self.stdout)

        if mismatches:
            raise CommandError(
                f"{len(mismatches)} samples disagree", returncode=CHECK_FAILURE
            )
        self.stderr.write(self.style.SUCCESS("All samples match"))
