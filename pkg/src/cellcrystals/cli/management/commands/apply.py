from cellcrystals.cli.base import CrystalCommand
from cellcrystals.cli.config import dumps, write_output
from cellcrystals.crystals.operators import apply_operators, eps, phi, wt


def describe(element) -> dict:
    letters = sorted(set(element.word.letters))
    return {
        "z": list(element.z),
        "wt": list(wt(element).coefficients),
        "eps": {str(i): eps(element, i) for i in letters},
        "phi": {str(i): phi(element, i) for i in letters},
    }


class Command(CrystalCommand):
    help = (
        "Apply Kashiwara operators to an element of a cellular crystal and\n"
        "print every intermediate element with wt, eps_i and phi_i."
    )

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_element_arguments(parser)
        parser.add_argument(
            "--ops",
            default="",
            help="Operators applied left to right\n\nExample: --ops 'f1 f2 e1'",
        )

    def run(self, config, options):
        element = config.element
        steps = [{"op": None, **describe(element)}]
        for op, result in apply_operators(element, options["ops"]):
            steps.append({"op": op, **describe(result)})

        if config.format == "json":
            text = dumps(
                {"datum": config.datum.label, "word": str(element.word), "steps": steps}
            )
        else:
            lines = [f"{config.datum.label} word {element.word}"]
            for step in steps:
                lines.append(
                    f"{step['op'] or 'start':>5}  z={step['z']}  wt={step['wt']}  "
                    f"eps={step['eps']}  phi={step['phi']}"
                )
            text = "\n".join(lines)
        write_output(text + "\n", config.out, self.stdout)
