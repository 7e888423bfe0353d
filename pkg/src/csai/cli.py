"""Command-line front end: JSON in, JSON verdict out.

Exit codes: 0 affirmative verdict, 1 negative verdict (with its witness or
certificate), 2 input error ({"error": ...}), 3 inconclusive.
"""
import argparse
import json
import sys

from . import cones, involutions, structure, words
from .errors import (AlgebraError, BadCertificate, Inconclusive, InternalInconsistency,
                     NoSolution, ShapeError)
from .jsonio import (decode_algebra, decode_certificate, decode_involution, decode_matrix,
                     decode_rational, encode_certificate, encode_matrix, encode_scalar,
                     encode_vector, require)
from .matrices import MatrixTuple, reduced_trace

OK, NEGATIVE, INPUT_ERROR, INCONCLUSIVE = 0, 1, 2, 3


def _matrix_list(obj, key):
    items = require(obj, key)
    if not isinstance(items, list) or not items:
        raise ShapeError(f"{key!r} must be a non-empty list of matrices")
    return MatrixTuple(decode_matrix(x) for x in items)


def cmd_similar(doc, args):
    X, Y = _matrix_list(doc, "X"), _matrix_list(doc, "Y")
    max_len = args.max_len if args.max_len is not None else doc.get("max_len")
    v = words.decide_similarity(X, Y, max_len=max_len, threads=args.threads)
    out = {"outcome": v.outcome}
    if not v.equivalent:
        out["witness"] = str(v.witness)
        out["traces"] = [encode_scalar(t) for t in v.traces]
        return NEGATIVE, out
    return OK, out


def cmd_psd(doc, args):
    ok, cert = cones.is_psd(decode_matrix(doc))
    return (OK if ok else NEGATIVE), {"psd": ok, "certificate": encode_certificate(cert)}


def cmd_signature(doc, args):
    cert = cones.diagonalize_congruence(decode_matrix(doc))
    sig = cones.signature_from(cert)
    return OK, {"positives": sig.positives, "negatives": sig.negatives, "zeros": sig.zeros,
                "signature": sig.signature, "certificate": encode_certificate(cert)}


def cmd_herm_square(doc, args):
    res = cones.hermitian_square_certificate(decode_matrix(doc))
    out = {"certificate": encode_certificate(res.certificate)}
    if isinstance(res, cones.ExactFactor):
        out.update(outcome="exact", b=encode_matrix(res.b))
        return OK, out
    if isinstance(res, cones.RealClosureFactor):
        out["outcome"] = "real-closure"
        return OK, out
    out["outcome"] = "not-psd"
    return NEGATIVE, out


def cmd_invo_classify(doc, args):
    c = involutions.classify(decode_involution(doc))
    return OK, {"kind": c.kind, "type": c.type, "dim_sym": c.dim_sym}


def cmd_invo_positive(doc, args):
    ok, cert = involutions.is_positive(decode_involution(doc))
    return (OK if ok else NEGATIVE), {"positive": ok, "certificate": encode_certificate(cert)}


def cmd_solve_scaling(doc, args):
    sigma = decode_involution(require(doc, "sigma"))
    gamma = decode_involution(require(doc, "gamma"))
    try:
        a = involutions.solve_scaling(sigma, gamma)
    except NoSolution as exc:
        return NEGATIVE, {"outcome": "no-solution", "reason": str(exc)}
    return OK, {"outcome": "solved", "a": encode_matrix(a)}


def cmd_cone_verify(doc, args):
    a = decode_matrix(require(doc, "a"))
    inv = decode_involution(require(doc, "involution"))
    z = decode_matrix(require(doc, "z"))
    c = require(doc, "certificate")
    terms = tuple((decode_rational(require(t, "u")), decode_matrix(require(t, "x")))
                  for t in c.get("terms", []))
    cert = cones.ConeCertificate(decode_matrix(require(c, "p")),
                                 decode_certificate(require(c, "p_certificate")), terms)
    try:
        v = cones.verify_cone_certificate(a, inv, z, cert)
    except BadCertificate as exc:
        return NEGATIVE, {"valid": False, "reason": str(exc)}
    return (OK if v else NEGATIVE), {"valid": v.ok, "reason": v.reason}


def cmd_delta_check(doc, args):
    case, n = require(doc, "case"), require(doc, "n")
    items = require(doc, "elements")
    if "algebra" in doc:
        alg = decode_algebra(doc["algebra"])
        els = [alg.element([decode_rational(x) for x in v]) for v in items]
    else:
        els = [decode_matrix(x) for x in items]
    fam = structure.BasisFamily.from_list(case, n, els)
    v = structure.verify_delta(case, fam)
    indep = structure.check_linear_independence(els)
    return (OK if v else NEGATIVE), {"holds": v.ok, "failing_clause": v.reason,
                                     "independent": indep}


def _report(r):
    out = {"status": r.status, "m": r.m, "associative": r.associative.ok,
           "associativity_failure": r.associative.reason, "semisimple": r.semisimple,
           "center_dim": r.center_dim, "degree": r.degree, "notes": list(r.notes)}
    if r.center is not None:
        out["center"] = {"is_field": r.center.is_field, "method": r.center.method,
                         "element": encode_vector(r.center.element),
                         "polynomial": encode_vector(r.center.polynomial),
                         "factors": [[f, e] for f, e in r.center.factors]}
    if r.involution is not None:
        out["involution"] = {"ok": r.involution.ok, "failure": r.involution.reason,
                             "kind": r.involution_kind}
    if r.status == "inconclusive":
        return INCONCLUSIVE, out
    return (OK if r.passed else NEGATIVE), out


def cmd_csa_check(doc, args):
    return _report(structure.csa_model_check(decode_algebra(doc), seed=args.seed))


def cmd_csai_check(doc, args):
    return _report(structure.csai_model_check(decode_algebra(doc), seed=args.seed))


def cmd_trd(doc, args):
    return OK, {"trd": encode_scalar(reduced_trace(decode_matrix(doc)))}


COMMANDS = {
    "similar": cmd_similar,
    "psd": cmd_psd,
    "signature": cmd_signature,
    "herm-square": cmd_herm_square,
    "invo-classify": cmd_invo_classify,
    "invo-positive": cmd_invo_positive,
    "solve-scaling": cmd_solve_scaling,
    "cone-verify": cmd_cone_verify,
    "delta-check": cmd_delta_check,
    "csa-check": cmd_csa_check,
    "csai-check": cmd_csai_check,
    "trd": cmd_trd,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="csai", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("path", help="input JSON file, or - for stdin")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--max-len", type=int, default=None)
        p.add_argument("--threads", type=int, default=1)
    return parser


def dumps(obj):
    return json.dumps(obj, sort_keys=True, ensure_ascii=False) + "\n"


def run(argv=None, stdin=None, stdout=None):
    """Run one command; returns the exit code and writes one JSON document."""
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    args = build_parser().parse_args(argv)
    try:
        if args.path == "-":
            text = stdin.read()
        else:
            with open(args.path, encoding="utf-8") as fh:
                text = fh.read()
        doc = json.loads(text)
        code, out = COMMANDS[args.command](doc, args)
    except InternalInconsistency:
        raise
    except Inconclusive as exc:
        code, out = INCONCLUSIVE, {"inconclusive": str(exc)}
    except (OSError, json.JSONDecodeError, AlgebraError, KeyError, TypeError, ValueError) as exc:
        code, out = INPUT_ERROR, {"error": f"{type(exc).__name__}: {exc}"}
    stdout.write(dumps(out))
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
