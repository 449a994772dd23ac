import argparse
import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from cli import serialization
from criteria import closed_forms
from criteria.models import Route
from criteria.services import (
    classify_family,
    condition_text,
    ed_all_moduli,
    ed_apery_criterion,
    ed_closed_form,
    ed_direct,
    ed_polynomial,
)
from semigroups.exceptions import SemigroupError
from semigroups.services import (
    alternating_gap_sum,
    apery_set,
    arithmetic_generators,
    from_generators,
    generalized_arithmetic_generators,
    is_maximal_embedding_dimension,
)
from verification import services as verification

logger = logging.getLogger(__name__)

ED_ROUTES = {
    Route.DIRECT: ed_direct,
    Route.APERY: ed_apery_criterion,
    Route.POLYNOMIAL: ed_polynomial,
    Route.CLOSED_FORM: ed_closed_form,
}

SWEEPS = ("emb2", "genarith", "equiv", "tuenter", "mult3", "mult2")

SWEEP_MISMATCH_EXIT = 3


def int_list(length=None):
    """argparse type for comma-separated integers, e.g. `5,7`."""

    def parse(text):
        try:
            values = [int(token) for token in text.split(",")]
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
        if length is not None and len(values) != length:
            raise argparse.ArgumentTypeError(f"expected {length} integers, got {text!r}")
        return values

    return parse


def positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


class Command(BaseCommand):
    help = "Numerical semigroup gaps: Apery sets, even distribution criteria and verification sweeps."

    requires_system_checks = []

    def add_arguments(self, parser):
        commands = parser.add_subparsers(dest="command", required=True)

        info = commands.add_parser("info", help="Invariants of the semigroup.")
        self._add_semigroup_arguments(info)

        apery = commands.add_parser("apery", help="Apery set relative to a nonzero element.")
        self._add_semigroup_arguments(apery)
        apery.add_argument("--rel", type=int, required=True, help="Apery base element")

        gaps = commands.add_parser("gaps", help="List the gaps.")
        self._add_semigroup_arguments(gaps)

        ed = commands.add_parser("ed", help="Even distribution of the gaps modulo m.")
        self._add_semigroup_arguments(ed)
        ed.add_argument("--mod", type=positive_int, required=True, dest="m", help="Modulus m")
        ed.add_argument(
            "--route",
            choices=Route.values,
            default=Route.DIRECT.value,
            help="Decision procedure (default: direct)",
        )

        ed_all = commands.add_parser("ed-all", help="Every modulus the gaps are evenly distributed modulo.")
        self._add_semigroup_arguments(ed_all)

        classify = commands.add_parser("classify", help="Closed-form family of the semigroup.")
        self._add_semigroup_arguments(classify)

        verify = commands.add_parser("verify", help="Cross-check the criteria against brute force.")
        verify.add_argument("sweep", choices=SWEEPS)
        verify.add_argument("--max-b", type=positive_int, default=settings.NSGAP_VERIFY_MAX_B)
        verify.add_argument("--max-a", type=positive_int, default=settings.NSGAP_VERIFY_MAX_A)
        verify.add_argument("--max-hd", type=positive_int, default=settings.NSGAP_VERIFY_MAX_HD)
        verify.add_argument("--trials", type=positive_int, default=settings.NSGAP_VERIFY_TRIALS)
        verify.add_argument("--seed", type=int, default=settings.NSGAP_VERIFY_SEED)
        verify.add_argument("--max-c", type=positive_int, default=settings.NSGAP_VERIFY_MAX_C)
        verify.add_argument("--max-m", type=positive_int, default=settings.NSGAP_VERIFY_MAX_M)
        verify.add_argument(
            "--timing",
            action="store_true",
            help="Include elapsed_ms (output is then no longer reproducible).",
        )
        self._add_format_argument(verify)

    def _add_semigroup_arguments(self, parser):
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument("--gens", type=int_list(), help="Generators, e.g. 5,7")
        source.add_argument("--two", type=int_list(2), help="Embedding dimension 2: a,b")
        source.add_argument(
            "--genarith", type=int_list(3), help="Generalized arithmetic family: a,h,d"
        )
        source.add_argument("--arith", type=int_list(2), help="Arithmetic family: a,d")
        self._add_format_argument(parser)

    def _add_format_argument(self, parser):
        parser.add_argument(
            "--format",
            choices=["json", "tsv"],
            default=settings.NSGAP_DEFAULT_FORMAT,
        )

    def handle(self, *args, **options):
        command = options["command"]
        handler = getattr(self, "handle_" + command.replace("-", "_"))
        try:
            output = handler(options)
        except SemigroupError as exc:
            logger.debug("nsgap %s failed: %s", command, exc)
            raise CommandError(str(exc), returncode=1)
        self.stdout.write(output)

    def _semigroup(self, options):
        if options.get("two"):
            closed_forms.check_embdim2(*options["two"])
            generators = options["two"]
        elif options.get("genarith"):
            closed_forms.check_gen_arith(*options["genarith"])
            generators = generalized_arithmetic_generators(*options["genarith"])
        elif options.get("arith"):
            a, d = options["arith"]
            closed_forms.check_gen_arith(a, 1, d)
            generators = arithmetic_generators(a, d)
        else:
            generators = options["gens"]
        return from_generators(generators)

    def _render(self, options, payload, tsv):
        if options["format"] == "tsv":
            return tsv(payload)
        return serialization.render_json(payload)

    def handle_info(self, options):
        semigroup = self._semigroup(options)
        payload = serialization.serialize_info(
            semigroup,
            apery_set(semigroup, semigroup.multiplicity),
            is_maximal_embedding_dimension(semigroup),
            alternating_gap_sum(semigroup),
        )
        return self._render(options, payload, serialization.info_tsv)

    def handle_apery(self, options):
        semigroup = self._semigroup(options)
        ap = apery_set(semigroup, options["rel"])
        limit = settings.NSGAP_GAP_OUTPUT_LIMIT
        if options["format"] == "tsv":
            return serialization.apery_tsv(ap, limit)
        payload = serialization.serialize_listing(
            "elements", ap.elements, limit, relative_to=ap.relative_to
        )
        return serialization.render_json(payload)

    def handle_gaps(self, options):
        semigroup = self._semigroup(options)
        limit = settings.NSGAP_GAP_OUTPUT_LIMIT
        if options["format"] == "tsv":
            return serialization.gaps_tsv(semigroup.gaps, limit)
        payload = serialization.serialize_listing(
            "gaps", semigroup.gaps, limit, genus=semigroup.genus, frobenius=semigroup.frobenius
        )
        return serialization.render_json(payload)

    def handle_ed(self, options):
        semigroup = self._semigroup(options)
        route = Route(options["route"])
        report = ED_ROUTES[route](semigroup, options["m"])
        payload = serialization.serialize_ed(report, semigroup.minimal_generators)
        return self._render(options, payload, serialization.ed_tsv)

    def handle_ed_all(self, options):
        semigroup = self._semigroup(options)
        payload = serialization.serialize_moduli(ed_all_moduli(semigroup))
        return self._render(options, payload, serialization.moduli_tsv)

    def handle_classify(self, options):
        semigroup = self._semigroup(options)
        classification = classify_family(semigroup)
        payload = serialization.serialize_classification(
            classification, condition_text(classification)
        )
        return self._render(options, payload, serialization.classification_tsv)

    def handle_verify(self, options):
        sweep = options["sweep"]
        if sweep == "emb2":
            report = verification.sweep_embdim2(options["max_b"])
        elif sweep == "genarith":
            report = verification.sweep_gen_arith(options["max_a"], options["max_hd"])
        elif sweep == "equiv":
            report = verification.sweep_equivalences(options["trials"], options["seed"])
        elif sweep == "tuenter":
            report = verification.sweep_tuenter(options["trials"], options["seed"])
        elif sweep == "mult3":
            report = verification.sweep_mult3(options["max_c"], options["max_m"])
        else:
            report = verification.sweep_mult2(options["max_b"])

        payload = serialization.serialize_sweep(report, timing=options["timing"])
        output = self._render(options, payload, serialization.sweep_tsv)
        if not report.passed:
            self.stdout.write(output)
            raise CommandError(
                f"sweep {sweep} found {len(report.mismatches)} mismatches",
                returncode=SWEEP_MISMATCH_EXIT,
            )
        return output
