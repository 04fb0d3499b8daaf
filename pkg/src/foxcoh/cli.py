"""Command line interface.

    foxcoh <command> <manifest.json> [--flavor F] [--json PATH] [--check] [--quotient]

Commands: verify, h1, centralizer <word>, abelianization, fox <generator> <relator-index>.
Exit status: 0 success, 1 verification or check failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import __version__
from .cohomology import h1_dimension
from .errors import CheckFailedError, FoxcohError, InputError, ManifestError, VerificationError
from .exactla import QuatMatrix, hermitian_signature
from .lie import FLAVORS, centralizer_dimension, evaluate_word_matrix, lie_basis
from .manifest import Manifest, format_matrix
from .words import abelianization, abelianization_matrix, augmentation, describe_abelian, fox_derivative

FLAVOR_CHOICES = FLAVORS + ("all",)


def _flavors(args, manifest):
    if args.flavor is None:
        return manifest.flavors
    if args.flavor == "all":
        return list(FLAVORS)
    return [args.flavor]


def _form_block(manifest):
    form = manifest.form
    return {
        "J": format_matrix(form.J),
        "signature": list(hermitian_signature(form.J)),
        "source": manifest.form_source,
    }


def cmd_verify(manifest: Manifest, args) -> dict:
    rho = manifest.representation()
    p = manifest.presentation
    identity = QuatMatrix.identity()
    membership = {name: manifest.form.preserves(g) for name, g in manifest.images.items()}
    relators = [
        {"relator": p.format(r), "identity": evaluate_word_matrix(r, rho) == identity}
        for r in p.relators
    ]
    report = {
        "form": _form_block(manifest),
        "membership": membership,
        "relators": relators,
    }
    if manifest.quotient is not None:
        report["quotient_relators"] = [
            {"relator": manifest.quotient.format(r),
             "identity": evaluate_word_matrix(r, rho) == identity}
            for r in manifest.quotient.relators
        ]
    failures = []
    if not all(membership.values()):
        bad = [k for k, v in membership.items() if not v]
        failures.append({"code": "NOT_IN_GROUP", "message": f"g* J g != J for {', '.join(bad)}"})
    for key in ("relators", "quotient_relators"):
        for item in report.get(key, []):
            if not item["identity"]:
                failures.append({"code": "NOT_A_REPRESENTATION",
                                 "message": f"relator {item['relator']} is not mapped to the identity"})
    report["failures"] = failures
    return report


def _h1_reports(rho, presentation, flavors):
    out = {}
    for flavor in flavors:
        out[flavor] = h1_dimension(rho, lie_basis(rho.form, flavor), presentation).to_dict()
    return out


def _verdicts(reports, free_rank):
    v = {}
    if "sp21" in reports and "u21" in reports:
        excess = reports["sp21"]["h1"] - reports["u21"]["h1"]
        v["h1_sp21_minus_u21"] = excess
        v["deformable_outside_u21_first_order"] = excess > 0
    if "u21" in reports and "su21" in reports:
        v["central_split_holds"] = reports["u21"]["h1"] == reports["su21"]["h1"] + free_rank
    return v


def cmd_h1(manifest: Manifest, args) -> dict:
    rho = manifest.representation()
    flavors = _flavors(args, manifest)
    p = manifest.presentation
    factors, free_rank = abelianization(p)
    reports = _h1_reports(rho, p, flavors)
    result = {
        "form": _form_block(manifest),
        "presentation": repr(p),
        "reports": reports,
        "verdicts": _verdicts(reports, free_rank),
    }
    if args.quotient:
        if manifest.quotient is None:
            raise ManifestError("--quotient given but the manifest has no 'quotient' presentation")
        q = manifest.quotient
        qfactors, qfree = abelianization(q)
        qreports = _h1_reports(rho, q, flavors)
        result["quotient"] = {
            "presentation": repr(q),
            "reports": qreports,
            "verdicts": _verdicts(qreports, qfree),
            "inflation_holds": {
                f: reports[f]["h1"] >= qreports[f]["h1"] for f in flavors
            },
        }
    return result


def cmd_centralizer(manifest: Manifest, args) -> dict:
    rho = manifest.representation()
    if args.word is None:
        raise InputError("centralizer needs a word, e.g. 'foxcoh centralizer m.json a'")
    w = manifest.presentation.word(args.word)
    g = evaluate_word_matrix(w, rho)
    flavors = _flavors(args, manifest) if args.flavor else ["sp21"]
    dims = {}
    for flavor in flavors:
        B = lie_basis(rho.form, flavor)
        z = centralizer_dimension(g, B)
        dims[flavor] = {"dim": B.dim, "centralizer_dim": z, "pair_space_bound": B.dim - 2 * z}
    return {
        "word": manifest.presentation.format(w),
        "matrix": format_matrix(g),
        "centralizers": dims,
    }


def cmd_abelianization(manifest: Manifest, args) -> dict:
    out = {}
    pres = [("presentation", manifest.presentation)]
    if args.quotient and manifest.quotient is not None:
        pres.append(("quotient", manifest.quotient))
    for key, p in pres:
        factors, free_rank = abelianization(p)
        out[key] = {
            "presentation": repr(p),
            "relation_matrix": abelianization_matrix(p).tolist(),
            "invariant_factors": list(factors),
            "free_rank": free_rank,
            "group": describe_abelian(factors, free_rank),
        }
    return out


def cmd_fox(manifest: Manifest, args) -> dict:
    p = manifest.presentation
    if args.generator is None or args.relator_index is None:
        raise InputError("fox needs a generator and a relator index, e.g. 'foxcoh fox m.json a 0'")
    if args.generator not in p.generators:
        raise InputError(f"unknown generator {args.generator!r}")
    try:
        j = int(args.relator_index)
    except ValueError:
        raise InputError(f"relator index must be an integer, got {args.relator_index!r}") from None
    if not 0 <= j < p.m:
        raise InputError(f"relator index {j} out of range (0..{p.m - 1})")
    i = p.generators.index(args.generator)
    d = fox_derivative(i, p.relators[j])
    return {
        "generator": args.generator,
        "relator_index": j,
        "relator": p.format(p.relators[j]),
        "derivative": p.format(d),
        "augmentation": augmentation(d),
    }


COMMANDS = {
    "verify": cmd_verify,
    "h1": cmd_h1,
    "centralizer": cmd_centralizer,
    "abelianization": cmd_abelianization,
    "fox": cmd_fox,
}


def _check(command, manifest, report) -> list:
    """Compare a report with the manifest's expected block; list mismatches."""
    exp = manifest.expected
    bad = []

    def cmp(label, want, got):
        if want != got:
            bad.append(f"{label}: expected {want}, got {got}")

    if command == "h1":
        for key in ("h0", "h1"):
            for flavor, want in exp.get(key, {}).items():
                if flavor in report["reports"]:
                    cmp(f"{key}[{flavor}]", want, report["reports"][flavor][key])
        if "split" in exp and "sp21" in report["reports"]:
            cmp("split", exp["split"], report["reports"]["sp21"]["split"])
        if "quotient" in report and "quotient" in exp:
            for flavor, want in exp["quotient"].get("h1", {}).items():
                if flavor in report["quotient"]["reports"]:
                    cmp(f"quotient.h1[{flavor}]", want, report["quotient"]["reports"][flavor]["h1"])
    elif command == "abelianization":
        for key, sub in (("presentation", exp), ("quotient", exp.get("quotient", {}))):
            want = sub.get("abelianization")
            if want is not None and key in report:
                got = {k: report[key][k] for k in ("invariant_factors", "free_rank")}
                cmp(f"{key}.abelianization", want, got)
    elif command == "centralizer":
        want = exp.get("centralizer", {}).get(report["word"])
        if want is not None and "sp21" in report["centralizers"]:
            cmp(f"centralizer[{report['word']}]", want, report["centralizers"]["sp21"]["centralizer_dim"])
    return bad


def _summary(command, report) -> str:
    lines = [f"{command}: {report.get('manifest', '')}"]
    if command == "verify":
        form = report["form"]
        lines.append(f"  form ({form['source']}), signature {tuple(form['signature'])}: {form['J']}")
        for name, ok in report["membership"].items():
            lines.append(f"  g* J g = J for {name}: {'yes' if ok else 'NO'}")
        for key in ("relators", "quotient_relators"):
            for item in report.get(key, []):
                lines.append(f"  {item['relator']} -> identity: {'yes' if item['identity'] else 'NO'}")
    elif command == "h1":
        blocks = [("", report)]
        if "quotient" in report:
            blocks.append(("quotient ", report["quotient"]))
        for prefix, block in blocks:
            lines.append(f"  {prefix}presentation {block['presentation']}")
            for flavor, r in block["reports"].items():
                line = (f"  {flavor:>5}: d={r['d']} H0={r['h0']} Z1={r['z1']} B1={r['b1']} "
                        f"H1={r['h1']} (Zariski tangent dimension)")
                if r.get("split"):
                    line += f" split u21={r['split']['u21']} m={r['split']['m']}"
                lines.append(line)
            for k, v in block["verdicts"].items():
                lines.append(f"  {k}: {v}")
            if "inflation_holds" in block:
                lines.append(f"  inflation_holds: {block['inflation_holds']}")
    elif command == "centralizer":
        lines.append(f"  word {report['word']}")
        for flavor, c in report["centralizers"].items():
            lines.append(f"  {flavor}: dim Z = {c['centralizer_dim']}, "
                         f"{c['dim']} - 2*{c['centralizer_dim']} = {c['pair_space_bound']}")
    elif command == "abelianization":
        for key, a in report.items():
            if isinstance(a, dict) and "group" in a:
                lines.append(f"  {key} {a['presentation']}: {a['group']}")
    elif command == "fox":
        lines.append(f"  d({report['relator']})/d{report['generator']} = {report['derivative']}")
        lines.append(f"  augmentation = {report['augmentation']}")
    for item in report.get("failures", []):
        lines.append(f"  FAILED [{item['code']}] {item['message']}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="foxcoh",
        description="Exact twisted H^0/H^1 of finitely presented groups in sp(2,1), u(2,1), su(2,1).",
    )
    parser.add_argument("--version", action="version", version=f"foxcoh {__version__}")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("manifest", help="manifest JSON path, or a bundled fixture name")
    parser.add_argument("args", nargs="*", help="centralizer: <word>; fox: <generator> <relator-index>")
    parser.add_argument("--flavor", choices=FLAVOR_CHOICES)
    parser.add_argument("--json", metavar="PATH", help="write the JSON report here ('-' for stdout)")
    parser.add_argument("--check", action="store_true",
                        help="compare against the manifest's expected values")
    parser.add_argument("--quotient", action="store_true",
                        help="also run on the manifest's quotient presentation")
    return parser


def _bind_positionals(args):
    extra = list(args.args)
    args.word = args.generator = args.relator_index = None
    if args.command == "centralizer":
        if len(extra) > 1:
            raise InputError("centralizer takes one word")
        args.word = extra[0] if extra else None
    elif args.command == "fox":
        if len(extra) > 2:
            raise InputError("fox takes a generator and a relator index")
        args.generator = extra[0] if extra else None
        args.relator_index = extra[1] if len(extra) > 1 else None
    elif extra:
        raise InputError(f"{args.command} takes no extra arguments")


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def run(argv=None) -> tuple:
    """Run one command; returns (report dict, exit code, parsed args)."""
    args = build_parser().parse_args(argv)
    report = {"command": args.command, "version": __version__}
    try:
        _bind_positionals(args)
        manifest = Manifest.load(args.manifest)
        report["manifest"] = manifest.name
        report.update(COMMANDS[args.command](manifest, args))
        failures = report.setdefault("failures", [])
        if args.check:
            mismatches = _check(args.command, manifest, report)
            report["check"] = {"passed": not mismatches, "mismatches": mismatches}
            failures.extend({"code": CheckFailedError.code, "message": m} for m in mismatches)
        report["ok"] = not failures
        code = 0 if report["ok"] else VerificationError.exit_code
    except FoxcohError as exc:
        report["ok"] = False
        report["error"] = exc.to_dict()
        code = exc.exit_code
    return report, code, args


def main(argv: Optional[list] = None) -> int:
    report, code, args = run(argv)
    if args.json:
        text = dumps(report)
        if args.json == "-":
            sys.stdout.write(text)
        else:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(text)
    elif "error" in report:
        print(f"error [{report['error']['code']}]: {report['error']['message']}", file=sys.stderr)
    else:
        print(_summary(args.command, report))
    return code


if __name__ == "__main__":
    sys.exit(main())
