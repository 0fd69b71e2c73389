//! Serializable reports for every command, with plain-text renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use spectral_moore_core::bounds::{BoundKind, BoundResult, Comparison, Value};
use spectral_moore_core::feasibility::{
    Evidence, FeasibilityReport, GfScreenReport, MultiplicityRecord, NonexistenceReport, PairWitness,
    RationalScreenEntry, ScreenCriterion,
};
use spectral_moore_core::gfpoly::FactorizationWitness;
use spectral_moore_core::graphs::GraphReport;
use spectral_moore_core::lpcert::{Certificate, Coeffs};
use spectral_moore_core::theta::Theta;

use crate::parse::rational_text;

/// A number with its exactness flag.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Num {
    pub exact: bool,
    pub text: String,
    pub approx: f64,
}

impl Num {
    pub fn from_value(v: &Value) -> Self {
        match v {
            Value::Exact(q) => Self {
                exact: true,
                text: rational_text(q),
                approx: v.to_f64(),
            },
            Value::Approx(x) => Self::approx(*x),
        }
    }

    pub fn approx(x: f64) -> Self {
        Self {
            exact: false,
            text: format!("{}", x),
            approx: x,
        }
    }

    pub fn from_theta(t: &Theta) -> Self {
        Self {
            exact: t.is_exact(),
            text: t.to_string(),
            approx: t.value(),
        }
    }

    fn flag(&self) -> &'static str {
        if self.exact {
            "exact"
        } else {
            "approx"
        }
    }
}

impl std::fmt::Display for Num {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} ({})", self.text, self.flag())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub kind: String,
    pub k: u64,
    pub theta: Num,
    pub t: usize,
    pub c: Num,
    pub value: Num,
    pub diameter: usize,
    pub alternate: Option<(usize, Num)>,
    pub extremal_family: Option<String>,
}

impl BoundReport {
    pub fn new(r: &BoundResult) -> Self {
        Self {
            kind: match r.kind {
                BoundKind::Bipartite => "bipartite".into(),
                BoundKind::General => "general".into(),
            },
            k: r.k,
            theta: Num::from_theta(&r.theta),
            t: r.t,
            c: Num::from_value(&r.c),
            value: Num::from_value(&r.value),
            diameter: r.diameter(),
            alternate: r.alternate.as_ref().map(|(t, c)| (*t, Num::from_value(c))),
            extremal_family: r.extremal_family.map(String::from),
        }
    }

    fn symbol(&self) -> &'static str {
        if self.kind == "bipartite" {
            "M"
        } else {
            "N"
        }
    }

    pub fn text(&self) -> String {
        let mut s = format!(
            "k={} theta={} t={} c={} {}={} [{}]\n",
            self.k,
            self.theta.text,
            self.t,
            self.c.text,
            self.symbol(),
            self.value.text,
            self.value.flag()
        );
        if let Some((t, c)) = &self.alternate {
            let _ = writeln!(s, "also attained with t={} c={}", t, c.text);
        }
        if let Some(f) = &self.extremal_family {
            let _ = writeln!(s, "extremal: {} (diameter {})", f, self.diameter);
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompareReport {
    pub k: u64,
    pub theta: Num,
    pub bipartite: BoundReport,
    pub general: BoundReport,
    pub verdict: String,
    pub at_boundary: bool,
    pub consistent: bool,
}

impl CompareReport {
    pub fn new(c: &Comparison) -> Self {
        Self {
            k: c.bipartite.k,
            theta: Num::from_theta(&c.bipartite.theta),
            bipartite: BoundReport::new(&c.bipartite),
            general: BoundReport::new(&c.general),
            verdict: match c.verdict {
                std::cmp::Ordering::Less => "less".into(),
                std::cmp::Ordering::Equal => "equal".into(),
                std::cmp::Ordering::Greater => "greater".into(),
            },
            at_boundary: c.at_boundary,
            consistent: c.consistent(),
        }
    }

    pub fn text(&self) -> String {
        format!(
            "{}{}M {} N{}{}\n",
            self.bipartite.text(),
            self.general.text(),
            match self.verdict.as_str() {
                "less" => "<",
                "equal" => "=",
                _ => ">",
            },
            if self.at_boundary { " (boundary point)" } else { "" },
            if self.consistent { "" } else { " INCONSISTENT" }
        )
    }
}

/// One row of a theta sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompareRow {
    pub k: u64,
    pub theta: f64,
    pub t_bipartite: usize,
    pub c_bipartite: f64,
    pub m: f64,
    pub t_general: usize,
    pub c_general: f64,
    pub n: f64,
    pub verdict: String,
    pub at_boundary: bool,
    pub consistent: bool,
}

impl CompareRow {
    pub fn new(r: &CompareReport) -> Self {
        Self {
            k: r.k,
            theta: r.theta.approx,
            t_bipartite: r.bipartite.t,
            c_bipartite: r.bipartite.c.approx,
            m: r.bipartite.value.approx,
            t_general: r.general.t,
            c_general: r.general.c.approx,
            n: r.general.value.approx,
            verdict: r.verdict.clone(),
            at_boundary: r.at_boundary,
            consistent: r.consistent,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuotientReport {
    pub kind: String,
    pub k: u64,
    pub t: usize,
    pub c: Num,
    pub matrix: Vec<Vec<String>>,
    pub charpoly: String,
    pub factor: Option<String>,
    /// Isolating interval `[lo, hi]` of the second eigenvalue.
    pub second_eigenvalue: Option<(String, String)>,
    pub spectrum: Vec<f64>,
}

impl QuotientReport {
    pub fn text(&self) -> String {
        let mut s = format!("{}(k={}, t={}, c={})\n", self.kind, self.k, self.t, self.c.text);
        let w = self.matrix.iter().flatten().map(|e| e.len()).max().unwrap_or(1);
        for row in &self.matrix {
            let cells: Vec<String> = row.iter().map(|e| format!("{:>w$}", e, w = w)).collect();
            let _ = writeln!(s, "  [{}]", cells.join(" "));
        }
        let _ = writeln!(s, "charpoly: {}", self.charpoly);
        if let Some(f) = &self.factor {
            let _ = writeln!(s, "nontrivial factor: {}", f);
        }
        if let Some((lo, hi)) = &self.second_eigenvalue {
            let _ = writeln!(s, "second eigenvalue in [{}, {}] (exact isolation)", lo, hi);
        }
        let ev: Vec<String> = self.spectrum.iter().map(|x| format!("{:.10}", x)).collect();
        let _ = writeln!(s, "spectrum (approx): {}", ev.join(", "));
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertifyReport {
    pub k: u64,
    pub t: usize,
    pub c: Num,
    pub theta: Num,
    pub epsilon: u8,
    pub f: Vec<Num>,
    pub power: Vec<Num>,
    pub coefficients_positive: bool,
    pub bound: Num,
}

fn coeffs(c: &Coeffs) -> Vec<Num> {
    (0..c.len()).map(|i| Num::from_value(&c.get(i))).collect()
}

impl CertifyReport {
    pub fn new(cert: &Certificate, bound: &Value) -> Self {
        Self {
            k: cert.k,
            t: cert.t,
            c: Num::from_value(&cert.c),
            theta: Num::from_theta(&cert.theta),
            epsilon: cert.epsilon,
            f: coeffs(&cert.f),
            power: coeffs(&cert.power),
            coefficients_positive: cert.coefficients_positive(),
            bound: Num::from_value(bound),
        }
    }

    pub fn text(&self) -> String {
        let f: Vec<&str> = self.f.iter().map(|n| n.text.as_str()).collect();
        format!(
            "certificate k={} t={} c={} theta={} epsilon={}\nf = ({}) [{}]\ncoefficients positive: {}\nLP bound 2 f(k^2) / f_0 = {}\n",
            self.k,
            self.t,
            self.c.text,
            self.theta.text,
            self.epsilon,
            f.join(", "),
            self.f.first().map_or("exact", |n| n.flag()),
            self.coefficients_positive,
            self.bound
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenRecord {
    pub theta: f64,
    pub phi: f64,
    pub multiplicity: f64,
    pub exact_multiplicity: Option<String>,
    pub integral: bool,
}

impl EigenRecord {
    fn new(r: &MultiplicityRecord) -> Self {
        Self {
            theta: r.theta,
            phi: r.phi,
            multiplicity: r.m_theta,
            exact_multiplicity: r.exact.as_ref().map(rational_text),
            integral: r.is_integral,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BudgetOut {
    pub j: usize,
    pub v: f64,
    pub w: f64,
    pub l: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FeasibleReport {
    pub k: u64,
    pub d: usize,
    pub c: u64,
    pub epsilon: u8,
    pub m: usize,
    pub d_prime: usize,
    pub n: String,
    pub order_integral: bool,
    pub eigenvalues: Vec<EigenRecord>,
    pub zero: Option<EigenRecord>,
    pub integral: bool,
    pub unimodal: bool,
    pub total: f64,
    pub total_ok: bool,
    pub case2: String,
    pub case3: String,
    pub d_form2: String,
    pub d_form3: String,
    pub table7_row: Option<Vec<usize>>,
    pub d_admitted: bool,
    pub hhat: String,
    pub irrational_phi: Option<usize>,
    pub irrational_budget: Option<BudgetOut>,
    pub feasible: bool,
}

impl FeasibleReport {
    pub fn new(r: &FeasibilityReport) -> Self {
        let c = &r.candidate;
        let feasible = r.check.feasible() && r.d_admitted;
        Self {
            k: c.k,
            d: c.d,
            c: c.c,
            epsilon: c.epsilon,
            m: c.m,
            d_prime: c.d_prime,
            n: rational_text(&c.n),
            order_integral: c.order_is_integral(),
            eigenvalues: r.check.records.iter().map(EigenRecord::new).collect(),
            zero: r.check.zero.as_ref().map(EigenRecord::new),
            integral: r.check.integral,
            unimodal: r.check.unimodal,
            total: r.check.total,
            total_ok: r.check.total_ok,
            case2: r.mod_case.case2.to_string(),
            case3: r.mod_case.case3.to_string(),
            d_form2: r.mod_case.d_form2.into(),
            d_form3: r.mod_case.d_form3.into(),
            table7_row: r.mod_case.table7_row.clone(),
            d_admitted: r.d_admitted,
            hhat: r.hhat.display_var('z').to_string(),
            irrational_phi: r.irrational_phi,
            irrational_budget: r.budget.as_ref().map(|b| BudgetOut {
                j: b.j,
                v: b.v,
                w: b.w,
                l: b.l,
            }),
            feasible,
        }
    }

    pub fn text(&self) -> String {
        let mut s = format!(
            "candidate k={} d={} c={} (epsilon={}, m={}, d'={}) n=M(k,d+1,c)={}{}\n",
            self.k,
            self.d,
            self.c,
            self.epsilon,
            self.m,
            self.d_prime,
            self.n,
            if self.order_integral { "" } else { " (not an integer)" }
        );
        let _ = writeln!(s, "{:>14} {:>12} {:>16} {:>8}", "theta", "phi", "multiplicity", "integral");
        for r in self.eigenvalues.iter().chain(self.zero.iter()) {
            let m = r.exact_multiplicity.clone().unwrap_or_else(|| format!("{:.8}", r.multiplicity));
            let _ = writeln!(s, "{:>14.10} {:>12.8} {:>16} {:>8}", r.theta, r.phi, m, r.integral);
        }
        let _ = writeln!(
            s,
            "integral: {}  unimodal: {}  total 2 + sum = {:.8} ({})",
            self.integral,
            self.unimodal,
            self.total,
            if self.total_ok { "matches n" } else { "MISMATCH" }
        );
        let _ = writeln!(s, "mod 2 case {}: {}", self.case2, self.d_form2);
        let _ = writeln!(s, "mod 3 case {}: {}", self.case3, self.d_form3);
        match &self.table7_row {
            Some(row) => {
                let _ = writeln!(s, "admissible d for ({}, {}): {:?}; d admitted: {}", self.case2, self.case3, row, self.d_admitted);
            }
            None => {
                let _ = writeln!(s, "no table row for ({}, {})", self.case2, self.case3);
            }
        }
        let _ = writeln!(s, "H^_d(z) = {}", self.hhat);
        if let Some(n) = self.irrational_phi {
            let _ = writeln!(s, "irrational phi: {}", n);
        }
        if let Some(b) = &self.irrational_budget {
            let _ = writeln!(s, "irrational budget j={} (L={:.4})", b.j, b.l);
        }
        let _ = writeln!(s, "verdict: {}", if self.feasible { "FEASIBLE" } else { "INFEASIBLE" });
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorOut {
    pub factor: String,
    pub degree: usize,
    pub multiplicity: usize,
}

fn factors_out(w: &FactorizationWitness) -> Vec<FactorOut> {
    w.factors
        .iter()
        .map(|(f, m)| FactorOut {
            factor: f.to_string(),
            degree: f.degree().unwrap_or(0),
            multiplicity: *m,
        })
        .collect()
}

fn factor_string(w: &FactorizationWitness) -> String {
    let mut parts = Vec::new();
    if w.unit != 1 {
        parts.push(w.unit.to_string());
    }
    for (f, m) in &w.factors {
        if *m == 1 {
            parts.push(format!("({})", f));
        } else {
            parts.push(format!("({})^{}", f, m));
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GfFactorReport {
    pub p: u64,
    pub poly: String,
    pub unit: u64,
    pub factors: Vec<FactorOut>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub irreducible: bool,
}

impl GfFactorReport {
    pub fn new(poly: String, w: &FactorizationWitness) -> Self {
        Self {
            p: w.p,
            poly,
            unit: w.unit,
            irreducible: w.factors.len() == 1 && w.factors[0].1 == 1,
            factors: factors_out(w),
            min_degree: w.min_irreducible_degree,
            max_degree: w.max_irreducible_degree,
        }
    }

    pub fn text(&self) -> String {
        let mut s = format!("over GF({}): {}\n", self.p, self.poly);
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|f| {
                if f.multiplicity == 1 {
                    format!("({})", f.factor)
                } else {
                    format!("({})^{}", f.factor, f.multiplicity)
                }
            })
            .collect();
        let unit = if self.unit == 1 { String::new() } else { self.unit.to_string() };
        let _ = writeln!(s, "= {}{}", unit, parts.join(""));
        let _ = writeln!(
            s,
            "factor degrees {}..{}; irreducible: {}",
            self.min_degree, self.max_degree, self.irreducible
        );
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairOut {
    pub c1: u64,
    pub k1: u64,
    pub min_degree: usize,
    pub max_degree: usize,
    pub quadratic_count: usize,
    pub blocked: bool,
    pub ambiguous: bool,
    pub factorization: String,
}

impl PairOut {
    fn new(w: &PairWitness) -> Self {
        Self {
            c1: w.c1,
            k1: w.k1,
            min_degree: w.min_degree,
            max_degree: w.max_degree,
            quadratic_count: w.quadratic_count,
            blocked: w.blocked,
            ambiguous: w.ambiguous,
            factorization: factor_string(&w.factorization),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScreenOut {
    pub d: usize,
    pub p: u64,
    pub criterion: String,
    pub all_pairs_blocked: bool,
    pub ambiguous_pairs: usize,
    pub pairs: Vec<PairOut>,
}

impl ScreenOut {
    pub fn new(s: &GfScreenReport) -> Self {
        Self {
            d: s.d,
            p: s.p,
            criterion: match s.criterion {
                ScreenCriterion::CubicFactor => "factor of degree >= 3".into(),
                ScreenCriterion::QuadraticCount { budget } => {
                    format!("factor of degree >= 3 or more than {} quadratic factors", budget)
                }
            },
            all_pairs_blocked: s.all_pairs_blocked,
            ambiguous_pairs: s.ambiguous_pairs,
            pairs: s.pairs.iter().map(PairOut::new).collect(),
        }
    }

    fn text(&self, out: &mut String) {
        let _ = writeln!(
            out,
            "  GF({}) screen, {} pairs, criterion: {}; all blocked: {}",
            self.p,
            self.pairs.len(),
            self.criterion,
            self.all_pairs_blocked
        );
        let _ = writeln!(out, "  {:>4} {:>4} {:>4} {:>4} {:>5} {:>8}  factorization", "c'", "k'", "min", "max", "quad", "blocked");
        for w in &self.pairs {
            let _ = writeln!(
                out,
                "  {:>4} {:>4} {:>4} {:>4} {:>5} {:>8}  {}{}",
                w.c1,
                w.k1,
                w.min_degree,
                w.max_degree,
                w.quadratic_count,
                w.blocked,
                w.factorization,
                if w.ambiguous { "  [ambiguous]" } else { "" }
            );
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RationalOut {
    pub k: u64,
    pub c: u64,
    pub splits: bool,
    pub irrational_roots: usize,
    pub residual_degree: usize,
    pub modular_prime: Option<u64>,
}

impl RationalOut {
    fn new(e: &RationalScreenEntry) -> Self {
        Self {
            k: e.k,
            c: e.c,
            splits: e.splits,
            irrational_roots: e.irrational_roots,
            residual_degree: e.residual_degree,
            modular_prime: e.modular_prime,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EvidenceOut {
    NotInTable7,
    Table7Rows { rows: Vec<String> },
    GfScreen(ScreenOut),
    IrrationalBudget { budget: usize, k_from: u64, j: usize, v: f64, w: f64, l: f64 },
    RationalScreen { entries: Vec<RationalOut> },
    GfCountScreen(ScreenOut),
}

impl EvidenceOut {
    fn new(e: &Evidence) -> Self {
        match e {
            Evidence::NotInTable7 => EvidenceOut::NotInTable7,
            Evidence::Table7Rows(rows) => EvidenceOut::Table7Rows {
                rows: rows.iter().map(|(a, b)| format!("{}/{}", a, b)).collect(),
            },
            Evidence::GfScreen(s) => EvidenceOut::GfScreen(ScreenOut::new(s)),
            Evidence::IrrationalBudget { budget, k_from, found } => EvidenceOut::IrrationalBudget {
                budget: *budget,
                k_from: *k_from,
                j: found.j,
                v: found.v,
                w: found.w,
                l: found.l,
            },
            Evidence::RationalScreen(v) => EvidenceOut::RationalScreen {
                entries: v.iter().map(RationalOut::new).collect(),
            },
            Evidence::GfCountScreen(s) => EvidenceOut::GfCountScreen(ScreenOut::new(s)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NonexistReport {
    pub d: usize,
    pub verdict: String,
    pub mechanism: String,
    pub evidence: Vec<EvidenceOut>,
}

impl NonexistReport {
    pub fn new(r: &NonexistenceReport) -> Self {
        Self {
            d: r.d,
            verdict: r.verdict.to_string(),
            mechanism: r.mechanism.clone(),
            evidence: r.evidence.iter().map(EvidenceOut::new).collect(),
        }
    }

    pub fn primes(&self) -> Vec<u64> {
        self.evidence
            .iter()
            .filter_map(|e| match e {
                EvidenceOut::GfScreen(s) | EvidenceOut::GfCountScreen(s) => Some(s.p),
                _ => None,
            })
            .collect()
    }

    pub fn text(&self) -> String {
        let mut s = format!("d={} {}: {}\n", self.d, self.verdict, self.mechanism);
        for p in self.primes() {
            let _ = writeln!(s, "prime {}", p);
        }
        for e in &self.evidence {
            match e {
                EvidenceOut::NotInTable7 => {
                    let _ = writeln!(s, "- no row of the residue-case table lists d");
                }
                EvidenceOut::Table7Rows { rows } => {
                    let _ = writeln!(s, "- listed for residue cases {}", rows.join(", "));
                }
                EvidenceOut::GfScreen(sc) | EvidenceOut::GfCountScreen(sc) => {
                    let _ = writeln!(s, "- witness table:");
                    sc.text(&mut s);
                }
                EvidenceOut::IrrationalBudget { budget, k_from, j, l, .. } => {
                    let _ = writeln!(
                        s,
                        "- for k >= {}: at most {} irrational phi (j={}, L={:.4} >= 1; L increases with k); budget {}",
                        k_from, j, j, l, budget
                    );
                }
                EvidenceOut::RationalScreen { entries } => {
                    let _ = writeln!(s, "- splitting over Q for small k:");
                    for e in entries {
                        let _ = writeln!(
                            s,
                            "    k={} c={}: {}{}",
                            e.k,
                            e.c,
                            if e.splits { "splits into degree <= 2" } else { "has a factor of degree >= 3" },
                            e.modular_prime.map(|p| format!(" (seen mod {})", p)).unwrap_or_default()
                        );
                    }
                }
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub d: usize,
    pub verdict: String,
    pub mechanism: String,
    pub primes: String,
}

impl SweepRow {
    pub fn new(r: &NonexistReport) -> Self {
        Self {
            d: r.d,
            verdict: r.verdict.clone(),
            mechanism: r.mechanism.clone(),
            primes: r.primes().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphOut {
    pub name: String,
    pub k: u64,
    pub n: usize,
    pub lambda2: f64,
    pub girth: usize,
    pub diameter: usize,
    pub bound: Option<u64>,
    pub order_matches: Option<bool>,
    pub theta_matches: Option<bool>,
    pub girth_ok: bool,
    pub matches_bound: Option<bool>,
}

impl GraphOut {
    pub fn new(r: &GraphReport) -> Self {
        Self {
            name: r.name.clone(),
            k: r.k,
            n: r.n,
            lambda2: r.lambda2,
            girth: r.girth,
            diameter: r.diameter,
            bound: Some(r.bound),
            order_matches: Some(r.order_matches),
            theta_matches: Some(r.theta_matches),
            girth_ok: r.girth_ok,
            matches_bound: Some(r.matches_bound),
        }
    }

    pub fn text_header() -> String {
        format!(
            "{:<16} {:>3} {:>5} {:>14} {:>6} {:>5} {:>6} {:>8}\n",
            "graph", "k", "n", "lambda2", "girth", "diam", "M", "matches"
        )
    }

    pub fn text(&self) -> String {
        let opt = |b: Option<bool>| b.map_or("-".to_string(), |b| b.to_string());
        format!(
            "{:<16} {:>3} {:>5} {:>14.10} {:>6} {:>5} {:>6} {:>8}\n",
            self.name,
            self.k,
            self.n,
            self.lambda2,
            self.girth,
            self.diameter,
            self.bound.map_or("-".to_string(), |b| b.to_string()),
            opt(self.matches_bound)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Table1Row {
    pub name: String,
    pub k: u64,
    pub d: usize,
    pub c: u64,
    pub theta: String,
    pub bound: String,
    pub constructed: bool,
    pub family: Option<String>,
}

impl Table1Row {
    pub fn text(&self) -> String {
        format!(
            "{:<16} {:>3} {:>3} {:>3} {:>9} {:>6} {:>11}  {}\n",
            self.name,
            self.k,
            self.d,
            self.c,
            self.theta,
            self.bound,
            if self.constructed { "constructed" } else { "formula" },
            self.family.clone().unwrap_or_default()
        )
    }
}
