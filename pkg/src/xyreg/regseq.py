"""Regular-sequence certification and independent regularity oracles.

Certification is incremental: a prefix of elements with pairwise-coprime
*effective* leading monomials is extended either by an element whose true
lead is coprime to everything seen (a COPRIME_EXTEND step) or by an element
that first sheds the terms divisible by previously adjoined bare monomials,
after which the lead of the residue must be coprime to everything seen
(a TECHNICAL step).  Each step records every gcd and lead comparison it
made, so a stored certificate can be re-checked without re-deriving the
decompositions.

Two independent oracles decide regularity outright: the Hilbert-series
criterion for homogeneous sequences (quotient series equals the complete-
intersection product formula iff the sequence is regular) and a stepwise
colon-ideal test ((J : f) = J iff f is a non-zerodivisor modulo J).
Oracles run under graded-reverse-lexicographic order whatever the
certification order; regularity does not depend on that choice.
"""

from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import (BudgetExceededError, CertificationError, HomogeneityError,
                     UndefinedLeadError)
from .fields import PrimeField, RationalField, field_from_spec
from .groebner import GroebnerBasis, groebner_basis, multi_divide, normal_form
from .hilbert import complete_intersection_numerator, hilbert_numerator
from .groebner import lead_ideal, buchberger
from .orders import MonomialOrder
from .poly import Polynomial, Term, format_poly, parse_poly
from .ring import Monomial, VariableTable, format_monomial

ROLE_BASE = "base"
ROLE_BARE = "bare-monomial"
ROLE_TECHNICAL = "technical"


@dataclass(frozen=True)
class EffectiveElement:
    """A certified element together with the lead that counts for it."""

    poly: Polynomial
    effective_lead: Monomial
    role: str


@dataclass(frozen=True)
class TechnicalStep:
    """Record of one subtraction-based extension."""

    element: Polynomial
    subtractions: tuple  # of (Monomial, Term) pairs
    residue_lead: Monomial
    checks: dict
    strict_form: bool


def check_coprime_leads(seq, order=None):
    """True iff all pairwise leading-monomial gcds are 1.

    Returns (ok, witness); the witness names the first offending pair as
    (i, j, lead_i, lead_j) and is None when ok.
    """
    leads = []
    for p in seq:
        if p.is_zero():
            raise UndefinedLeadError("zero element has no leading term")
        if order is not None and p.order != order:
            p = p.resort(order)
        leads.append(p.leading_monomial())
    for i in range(len(leads)):
        for j in range(i + 1, len(leads)):
            if not leads[i].coprime(leads[j]):
                return False, (i, j, leads[i], leads[j])
    return True, None


def _split_prior(prior):
    bare = [e for e in prior if e.role == ROLE_BARE]
    others = [e for e in prior if e.role != ROLE_BARE]
    return bare, others


def check_technical_step(prior, h, order=None):
    """Decompose h against the prior bare monomials and certify the residue.

    Every term of h divisible by a prior bare monomial joins the subtraction
    list (first matching monomial wins); the residue's lead must then be
    coprime to all prior effective leads and bare monomials, and every other
    residue term must sit strictly below it.  Raises CertificationError with
    the violated condition's name; on success returns the TechnicalStep.
    """
    if order is None:
        order = h.order
    elif h.order != order:
        h = h.resort(order)
    if h.is_zero():
        raise CertificationError("residue_nonzero", "the element is zero")

    bare, others = _split_prior(prior)
    subtractions = []
    residue_terms = []
    for term in h.terms():
        hit = None
        for e in bare:
            if e.effective_lead.divides(term.monomial):
                hit = e.effective_lead
                break
        if hit is None:
            residue_terms.append(term)
        else:
            subtractions.append((hit, Term(term.coefficient, term.monomial / hit)))

    if not residue_terms:
        raise CertificationError(
            "residue_nonzero", "every term is divisible by a prior bare monomial")
    # terms() preserves the canonical descending sort, so the first is the lead
    residue_lead = residue_terms[0].monomial
    lead_coeff = residue_terms[0].coefficient

    checks = {}

    def record(name, ok, message):
        checks[name] = bool(ok)
        if not ok:
            raise CertificationError(name, message)

    try:
        h.field.inv(lead_coeff)
        unit = True
    except ZeroDivisionError:
        unit = False
    record("residue_lead_unit", unit, "residue lead coefficient is not invertible")

    prior_leads = [e.effective_lead for e in others]
    ok = all(prior_leads[i].coprime(prior_leads[j])
             for i in range(len(prior_leads)) for j in range(i + 1, len(prior_leads)))
    record("prior_leads_pairwise_coprime", ok,
           "prior effective leads are not pairwise coprime")

    bare_monos = [e.effective_lead for e in bare]
    ok = all(bare_monos[i].coprime(bare_monos[j])
             for i in range(len(bare_monos)) for j in range(i + 1, len(bare_monos)))
    record("bare_monomials_pairwise_coprime", ok,
           "prior bare monomials are not pairwise coprime")

    clash = next((m for m in bare_monos
                  for lead in prior_leads if not lead.coprime(m)), None)
    record("bare_monomials_coprime_to_prior_leads", clash is None,
           "a bare monomial shares a variable with a prior effective lead")

    clash = next((m for m in bare_monos if not residue_lead.coprime(m)), None)
    record("residue_lead_coprime_to_bare_monomials", clash is None,
           "the residue lead shares a variable with a prior bare monomial")

    clash = next((lead for lead in prior_leads if not residue_lead.coprime(lead)), None)
    record("residue_lead_coprime_to_prior_leads", clash is None,
           f"the residue lead {residue_lead!r} shares a variable with a prior effective lead")

    ok = all(order.compare(t.monomial, residue_lead) < 0 for t in residue_terms[1:])
    record("tail_below_residue_lead", ok,
           "a residue term is not strictly below the residue lead")

    non_bare_leads = prior_leads
    strict = all(any(t.monomial.divides(lead) for lead in non_bare_leads)
                 for _, t in subtractions)

    return TechnicalStep(element=h, subtractions=tuple(subtractions),
                         residue_lead=residue_lead, checks=checks,
                         strict_form=strict)


def coprime_extend_element(prior, p, order=None, role=ROLE_BASE):
    """Certify p by its true lead; it must be coprime to all prior effective leads."""
    if order is not None and p.order != order:
        p = p.resort(order)
    if p.is_zero():
        raise UndefinedLeadError("zero element has no leading term")
    lead = p.leading_monomial()
    for e in prior:
        if not e.effective_lead.coprime(lead):
            raise CertificationError(
                "lead_coprime_to_prior",
                f"lead {lead!r} shares a variable with a prior effective lead")
    return EffectiveElement(poly=p, effective_lead=lead, role=role)


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CertificateStep:
    kind: str  # "COPRIME_EXTEND" | "TECHNICAL"
    label: str
    element: Polynomial
    effective_lead: Monomial
    role: str
    subtractions: tuple = ()
    residue_lead: Monomial = None
    checks: dict = dc_field(default_factory=dict)
    strict_form: bool = None


@dataclass
class RegularityCertificate:
    n: int
    order_name: str
    field_spec: dict
    table: VariableTable
    steps: list
    verdict: str  # "certified" | "failed"
    failure: dict = None  # {"step": 1-based index, "condition": ...}
    note: str = ""

    def to_json_dict(self):
        steps = []
        for s in self.steps:
            steps.append({
                "kind": s.kind,
                "label": s.label,
                "role": s.role,
                "element": format_poly(s.element),
                "effective_lead": format_monomial(s.effective_lead, self.table),
                "subtractions": [
                    [format_monomial(m, self.table), _format_term(t, self.table)]
                    for m, t in s.subtractions
                ],
                "m_next": (format_monomial(s.residue_lead, self.table)
                           if s.residue_lead is not None else None),
                "checks": dict(s.checks),
                "strict_form": s.strict_form,
            })
        out = {
            "n": self.n,
            "order": self.order_name,
            "field": dict(self.field_spec),
            "steps": steps,
            "verdict": self.verdict,
        }
        if self.failure is not None:
            out["failure"] = dict(self.failure)
        if self.note:
            out["note"] = self.note
        return out


def _format_term(t, table):
    mono = format_monomial(t.monomial, table)
    if t.coefficient == 1:
        return mono
    if mono == "1":
        return str(t.coefficient)
    return f"{t.coefficient}*{mono}"


def _order_from_name(name, nvars, n):
    if name == "paper":
        return MonomialOrder.paper(n)
    if name == "grevlex":
        return MonomialOrder.grevlex(nvars)
    if name == "lex":
        return MonomialOrder.lex(nvars)
    raise ValueError(f"unknown order name {name!r}")


def recheck_certificate(data):
    """Re-run every stored gcd and lead check of a serialized certificate.

    Decompositions are taken as stored (subtraction lists are not re-derived);
    the residues, leads and coprimality conditions are recomputed from the
    polynomial strings.  Returns "certified" or "failed".
    """
    n = data["n"]
    table = VariableTable.xy(n)
    fld = field_from_spec(data["field"]["kind"], data["field"].get("prime", 32003))
    order = _order_from_name(data["order"], table.nvars, n)
    prior = []
    for s in data["steps"]:
        element = parse_poly(s["element"], table, fld, order)
        claimed_lead = _parse_monomial(s["effective_lead"], table, fld, order)
        try:
            if s["kind"] == "COPRIME_EXTEND":
                e = coprime_extend_element(prior, element, order, role=s["role"])
            else:
                sub = [(
                    _parse_monomial(m, table, fld, order),
                    parse_poly(t, table, fld, order).leading_term(),
                ) for m, t in s["subtractions"]]
                e = _replay_technical(prior, element, sub, order)
            if e.effective_lead != claimed_lead:
                return "failed"
            prior.append(e)
        except (CertificationError, UndefinedLeadError):
            return "failed"
    return "certified" if data["verdict"] == "certified" else data["verdict"]


def _parse_monomial(text, table, fld, order):
    return parse_poly(text, table, fld, order).leading_monomial()


def _replay_technical(prior, element, subtractions, order):
    """Re-verify a stored TECHNICAL step: subtract the recorded multiples and
    re-run the coprimality and lead checks on the resulting residue."""
    residue = element
    for m, t in subtractions:
        residue = residue - Polynomial.from_terms(
            element.table, element.field, order, [(t.coefficient, t.monomial * m)])
    if residue.is_zero():
        raise CertificationError("residue_nonzero", "stored subtractions cancel the element")
    lead = residue.leading_monomial()
    bare, others = _split_prior(prior)
    for e in others:
        if not e.effective_lead.coprime(lead):
            raise CertificationError("residue_lead_coprime_to_prior_leads", "clash")
    for e in bare:
        if not e.effective_lead.coprime(lead):
            raise CertificationError("residue_lead_coprime_to_bare_monomials", "clash")
    return EffectiveElement(poly=element, effective_lead=lead, role=ROLE_TECHNICAL)


# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------


def _oracle_order(table):
    return MonomialOrder.grevlex(table.nvars)


def regular_oracle_hilbert(seq, *, pair_budget=None, degree_budget=None):
    """Regularity via the complete-intersection Hilbert criterion.

    Homogeneous elements over GF(p) only.  True iff the Hilbert series of the
    quotient equals prod(1 - t^deg_i) / (1 - t)^nvars exactly.  A budget stop
    raises BudgetExceededError rather than returning a verdict.
    """
    seq = list(seq)
    if not seq:
        return True
    if not isinstance(seq[0].field, PrimeField):
        raise ValueError("the Hilbert oracle runs over a prime field")
    for p in seq:
        if not p.is_homogeneous():
            raise HomogeneityError("the Hilbert oracle requires homogeneous elements")
    if any(p.is_zero() for p in seq):
        return False
    degrees = [p.degree() for p in seq]
    if any(d == 0 for d in degrees):
        return False  # a unit makes the ideal improper
    order = _oracle_order(seq[0].table)
    gens = [p.resort(order) for p in seq]
    gb = buchberger(gens, order, pair_budget=pair_budget, degree_budget=degree_budget)
    numer = hilbert_numerator(lead_ideal(gb), seq[0].table.nvars)
    return tuple(numer.numerator) == complete_intersection_numerator(degrees)


def nonzerodivisor_colon(prefix_gb, f, *, pair_budget=None, degree_budget=None):
    """True iff (J : f) = J for the ideal J of the given basis.

    Computes J intersect <f> by adjoining one elimination variable ranked
    above everything, divides the intersection generators by f, and tests
    each quotient for membership in J.  The auxiliary variable never leaks
    into results.
    """
    if f.is_zero():
        return False
    if prefix_gb is None or len(prefix_gb.polys) == 0:
        return True  # the ambient ring is a domain
    if prefix_gb.contains_unit():
        return True  # J = R, the colon is again R
    order = prefix_gb.order
    table = prefix_gb.table
    ext_table = table.extend("_elim")
    ext_order = order.eliminate_last()
    aux_slot = ext_table.nvars - 1
    fld = f.field
    t_poly = Polynomial.variable(ext_table, fld, ext_order, aux_slot)
    one = Polynomial.constant(ext_table, fld, ext_order, fld.one)
    f_ext = f.lift_to(ext_table, ext_order)
    gens = [t_poly * g.lift_to(ext_table, ext_order) for g in prefix_gb.polys]
    gens.append((one - t_poly) * f_ext)
    ext_gb = groebner_basis(gens, ext_order,
                            pair_budget=pair_budget, degree_budget=degree_budget)
    for g in ext_gb.polys:
        if (g.exps[:, aux_slot] != 0).any():
            continue
        base = Polynomial(table, fld, order, g.exps[:, :aux_slot], g.coeffs)
        base = base.resort(order)
        quots, rem = multi_divide(base, [f])
        if not rem.is_zero():
            raise RuntimeError("intersection generator not divisible by f")
        if not normal_form(quots[0], prefix_gb).is_zero():
            return False
    return True


@dataclass
class OracleReport:
    method: str
    verdict: str  # "regular" | "not-regular"
    first_failure: int = None  # 1-based index (colon method)
    details: list = dc_field(default_factory=list)

    @property
    def regular(self):
        return self.verdict == "regular"


def sequence_oracle(seq, method="hilbert", *, pair_budget=None, degree_budget=None):
    """Decide regularity of the sequence; the colon method also locates the
    first failing index.  Budget stops raise BudgetExceededError."""
    seq = list(seq)
    if method not in ("hilbert", "colon"):
        raise ValueError(f"unknown oracle method {method!r}")
    if not seq:
        return OracleReport(method=method, verdict="regular",
                            details=["empty sequence: vacuously regular"])
    budgets = dict(pair_budget=pair_budget, degree_budget=degree_budget)
    if method == "hilbert":
        ok = regular_oracle_hilbert(seq, **budgets)
        return OracleReport(method=method, verdict="regular" if ok else "not-regular")

    order = _oracle_order(seq[0].table)
    seq = [p.resort(order) for p in seq]
    details = []
    gb = None
    for i, p in enumerate(seq, start=1):
        if p.is_zero():
            return OracleReport(method=method, verdict="not-regular",
                                first_failure=i,
                                details=details + [f"index {i}: zero element"])
        if not nonzerodivisor_colon(gb, p, **budgets):
            return OracleReport(method=method, verdict="not-regular",
                                first_failure=i,
                                details=details + [f"index {i}: zerodivisor modulo the prefix"])
        gb = groebner_basis(seq[:i], order, **budgets)
        if gb.contains_unit():
            return OracleReport(method=method, verdict="not-regular",
                                first_failure=i,
                                details=details + [f"index {i}: the ideal becomes the whole ring"])
        details.append(f"index {i}: non-zerodivisor, ideal still proper")
    return OracleReport(method=method, verdict="regular", details=details)


@dataclass
class ExtensionReport:
    chain: list
    accepted: list
    rejected: list  # (candidate position, reason)


def greedy_extend(base, candidates, method="hilbert", *,
                  pair_budget=None, degree_budget=None):
    """Scan candidates in order, appending each one that keeps the sequence
    regular.  An inconclusive oracle run skips the candidate and logs it;
    it is never accepted silently."""
    budgets = dict(pair_budget=pair_budget, degree_budget=degree_budget)
    base = list(base)
    report = sequence_oracle(base, method, **budgets)
    if not report.regular:
        raise ValueError("the base sequence is not regular")
    chain = list(base)
    accepted, rejected = [], []
    for pos, cand in enumerate(candidates):
        try:
            verdict = sequence_oracle(chain + [cand], method, **budgets)
        except BudgetExceededError as exc:
            rejected.append((pos, f"inconclusive: {exc}"))
            continue
        if verdict.regular:
            chain.append(cand)
            accepted.append(pos)
        else:
            rejected.append((pos, "not-regular"))
    return ExtensionReport(chain=chain, accepted=accepted, rejected=rejected)
