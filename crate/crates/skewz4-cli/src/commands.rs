//! Command implementations, independent of flag parsing and output
//! format. Each command returns a serializable report; rendering and
//! exit codes live in the binary.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use skewz4::{
    gray_image, nontrivial_ideals, plotkin_sum, CodeParams, DerivationKind, Error, RCode,
    RingElem, SkewPoly, Z4Code,
};

use crate::distance;
use crate::manifest::{Expected, KSpec, Manifest, Operand};

/// Which Z4 code to derive from an R-code. Plotkin sums feed the same
/// operand into both halves, so the operand is part of the selection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Selection {
    Gray,
    Res,
    Tor,
    PlotkinRes,
    PlotkinTor,
}

impl Selection {
    pub const ALL: [Self; 5] = [
        Self::Gray,
        Self::Res,
        Self::Tor,
        Self::PlotkinRes,
        Self::PlotkinTor,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Gray => "gray",
            Self::Res => "res",
            Self::Tor => "tor",
            Self::PlotkinRes => "plotkin-res",
            Self::PlotkinTor => "plotkin-tor",
        }
    }

    /// Parse --select values. Each value may hold several names joined
    /// by commas; `plotkin` expands to both operands; an empty list
    /// means everything.
    pub fn parse_list(values: &[String]) -> Result<Vec<Self>, String> {
        if values.is_empty() {
            return Ok(Self::ALL.to_vec());
        }
        let mut chosen = std::collections::BTreeSet::new();
        for value in values {
            for name in value.split(',') {
                match name.trim() {
                    "gray" => {
                        chosen.insert(Self::Gray);
                    }
                    "res" => {
                        chosen.insert(Self::Res);
                    }
                    "tor" => {
                        chosen.insert(Self::Tor);
                    }
                    "plotkin" => {
                        chosen.insert(Self::PlotkinRes);
                        chosen.insert(Self::PlotkinTor);
                    }
                    "plotkin-res" => {
                        chosen.insert(Self::PlotkinRes);
                    }
                    "plotkin-tor" => {
                        chosen.insert(Self::PlotkinTor);
                    }
                    other => {
                        return Err(format!(
                            "unknown selector '{other}'; expected gray, res, tor, \
                             plotkin, plotkin-res, or plotkin-tor"
                        ))
                    }
                }
            }
        }
        Ok(chosen.into_iter().collect())
    }
}

impl fmt::Display for Selection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Code parameters in serializable form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParamsOut {
    pub n: usize,
    pub k1: usize,
    pub k2: usize,
    pub d_lee: u32,
}

impl From<CodeParams> for ParamsOut {
    fn from(p: CodeParams) -> Self {
        Self {
            n: p.n,
            k1: p.k1,
            k2: p.k2,
            d_lee: p.d_lee,
        }
    }
}

impl fmt::Display for ParamsOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, 4^{} 2^{}, {}]", self.n, self.k1, self.k2, self.d_lee)
    }
}

/// Build the R-code described by a generator, length, and rank choice.
pub fn build_code(g: &SkewPoly, n: usize, k: KSpec) -> Result<RCode, Error> {
    match k {
        KSpec::Free => RCode::free_from_divisor(g, n),
        KSpec::Shifts(k) => Ok(RCode::from_shifts(g, n, k)),
    }
}

/// The Z4 code a selection picks out of an R-code.
pub fn derived_code(code: &RCode, sel: Selection) -> Z4Code {
    let n = code.n();
    match sel {
        Selection::Gray => gray_image(code),
        Selection::Res => Z4Code::from_rows(n, code.res_generators()),
        Selection::Tor => Z4Code::from_rows(n, code.tor_generators()),
        Selection::PlotkinRes => {
            let half = Z4Code::from_rows(n, code.res_generators());
            plotkin_sum(&half, &half).expect("operands share a length")
        }
        Selection::PlotkinTor => {
            let half = Z4Code::from_rows(n, code.tor_generators());
            plotkin_sum(&half, &half).expect("operands share a length")
        }
    }
}

// ---------------------------------------------------------------------
// verify

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Error,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Pass => "PASS",
            Self::Fail => "FAIL",
            Self::Error => "ERROR",
        }
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyCheck {
    pub label: String,
    pub selector: String,
    pub expected: ParamsOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed: Option<ParamsOut>,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
    pub checks: Vec<VerifyCheck>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failed == 0 && self.errors == 0
    }
}

/// Recompute every expected parameter set in the manifest and compare
/// exactly. Rows stay in manifest order; within an entry the selector
/// order is gray, res, tor, plotkin.
pub fn run_verify(manifest: &Manifest, bound: u64, threads: usize) -> VerifyReport {
    let mut checks = Vec::new();
    for entry in &manifest.entries {
        let slots: [(Option<Selection>, &Option<Expected>); 4] = [
            (Some(Selection::Gray), &entry.expected.gray),
            (Some(Selection::Res), &entry.expected.res),
            (Some(Selection::Tor), &entry.expected.tor),
            (None, &entry.expected.plotkin),
        ];
        let code = entry
            .generator_poly()
            .map_err(|e| e.to_string())
            .and_then(|g| {
                build_code(&g, entry.n, entry.k).map_err(|e| format!("building code: {e}"))
            });
        for (sel, slot) in slots {
            let Some(expected) = slot else { continue };
            let sel = sel.unwrap_or(match expected.operand {
                Some(Operand::Tor) => Selection::PlotkinTor,
                _ => Selection::PlotkinRes,
            });
            let mut check = VerifyCheck {
                label: entry.label.clone(),
                selector: sel.as_str().to_string(),
                expected: ParamsOut {
                    n: expected.n,
                    k1: expected.k1,
                    k2: expected.k2,
                    d_lee: expected.d_lee,
                },
                computed: None,
                status: CheckStatus::Error,
                message: None,
            };
            match &code {
                Err(msg) => check.message = Some(msg.clone()),
                Ok(code) => match distance::params(&derived_code(code, sel), bound, threads) {
                    Err(e) => check.message = Some(e.to_string()),
                    Ok(params) => {
                        let computed = ParamsOut::from(params);
                        check.computed = Some(computed);
                        if computed == check.expected {
                            check.status = CheckStatus::Pass;
                        } else {
                            check.status = CheckStatus::Fail;
                            check.message = Some(format!(
                                "expected {}, computed {}",
                                check.expected, computed
                            ));
                        }
                    }
                },
            }
            checks.push(check);
        }
    }
    let count = |s: CheckStatus| checks.iter().filter(|c| c.status == s).count();
    VerifyReport {
        total: checks.len(),
        passed: count(CheckStatus::Pass),
        failed: count(CheckStatus::Fail),
        errors: count(CheckStatus::Error),
        checks,
    }
}

// ---------------------------------------------------------------------
// analyze

pub struct AnalyzeConfig {
    pub generator: SkewPoly,
    pub n: usize,
    pub k: KSpec,
    pub selections: Vec<Selection>,
    pub bound: u64,
    pub threads: usize,
    /// Spans larger than this many scalar tuples skip the closure
    /// diagnostics instead of enumerating.
    pub span_limit: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosureOut {
    pub twisted_shift_closed: bool,
    pub cyclic: bool,
    pub quasicyclic_2: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DerivedRecord {
    pub selector: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub codewords: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeReport {
    pub generator: String,
    pub derivation: String,
    pub n: usize,
    pub k: String,
    pub is_right_divisor: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check_polynomial: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check_polynomial_central: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub free_rank: Option<usize>,
    pub span_tuples: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub span_size: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closure: Option<ClosureOut>,
    pub notes: Vec<String>,
    pub derived: Vec<DerivedRecord>,
}

impl AnalyzeReport {
    pub fn ok(&self) -> bool {
        self.derived.iter().all(|d| d.error.is_none())
    }
}

/// Diagnostics and derived-code parameters for one generator. Fails
/// only when the code itself cannot be built (free mode on a
/// non-divisor); per-selection problems are recorded in the report.
pub fn run_analyze(cfg: &AnalyzeConfig) -> Result<AnalyzeReport, Error> {
    let g = &cfg.generator;
    let kind = g.kind();
    let mut notes = Vec::new();
    let (is_right_divisor, check_polynomial, check_polynomial_central) =
        match g.right_divides_x_pow_minus_one(cfg.n) {
            Ok(Some(h)) => (true, Some(h.to_string()), Some(h.is_central())),
            Ok(None) => (false, None, None),
            Err(e) => {
                notes.push(format!("divisibility test not applicable: {e}"));
                (false, None, None)
            }
        };
    let code = build_code(g, cfg.n, cfg.k)?;
    let span_tuples = code.span_tuples();
    let (span_size, closure) = if span_tuples <= cfg.span_limit as u128 {
        match code.closure_check(cfg.span_limit) {
            Ok(report) => {
                let size = code
                    .enumerate_span(cfg.span_limit)
                    .map(|s| s.len() as u128)
                    .ok();
                (
                    size,
                    Some(ClosureOut {
                        twisted_shift_closed: report.twisted_shift_closed,
                        cyclic: report.cyclic,
                        quasicyclic_2: report.quasicyclic_2,
                    }),
                )
            }
            Err(e) => {
                notes.push(format!("closure check failed: {e}"));
                (None, None)
            }
        }
    } else {
        notes.push(format!(
            "closure diagnostics skipped: span has {span_tuples} scalar tuples, limit {}",
            cfg.span_limit
        ));
        (None, None)
    };
    let derived = cfg
        .selections
        .iter()
        .map(|&sel| {
            let z4 = derived_code(&code, sel);
            match distance::params(&z4, cfg.bound, cfg.threads) {
                Ok(p) => DerivedRecord {
                    selector: sel.as_str().to_string(),
                    params: Some(p.into()),
                    codewords: Some(z4.codeword_count()),
                    error: None,
                },
                Err(e) => DerivedRecord {
                    selector: sel.as_str().to_string(),
                    params: None,
                    codewords: Some(z4.codeword_count()),
                    error: Some(e.to_string()),
                },
            }
        })
        .collect();
    Ok(AnalyzeReport {
        generator: g.to_string(),
        derivation: kind.to_string(),
        n: cfg.n,
        k: cfg.k.to_string(),
        is_right_divisor,
        check_polynomial,
        check_polynomial_central,
        free_rank: code.free_rank(),
        span_tuples,
        span_size,
        closure,
        notes,
        derived,
    })
}

// ---------------------------------------------------------------------
// search

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KRange {
    Free,
    Shifts { lo: usize, hi: usize },
}

impl fmt::Display for KRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KRange::Free => f.write_str("free"),
            KRange::Shifts { lo, hi } => write!(f, "{lo}..{hi}"),
        }
    }
}

pub struct SearchConfig {
    pub n_lo: usize,
    pub n_hi: usize,
    pub deg_lo: usize,
    pub deg_hi: usize,
    pub k: KRange,
    pub kind: DerivationKind,
    pub selections: Vec<Selection>,
    pub seed: u64,
    /// None enumerates every candidate; Some(n) draws n seeded samples.
    pub samples: Option<u64>,
    pub bound: u64,
    pub threads: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchRecord {
    pub generator: String,
    pub derivation: String,
    pub selector: String,
    /// Length of the R-code the record came from.
    pub block_length: usize,
    pub k: String,
    pub n: usize,
    pub k1: usize,
    pub k2: usize,
    pub d_lee: u32,
    pub codewords: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchEcho {
    pub n: String,
    pub degree: String,
    pub k: String,
    pub derivation: String,
    pub selectors: Vec<String>,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    pub bound: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub config: SearchEcho,
    /// Candidates evaluated: one per (generator, k) pair.
    pub visited: u64,
    /// Candidates dropped before deriving anything, e.g. free-mode
    /// generators that do not divide x^n - 1.
    pub skipped: u64,
    /// Derivation or distance failures; details in notes.
    pub errors: u64,
    pub notes: Vec<String>,
    /// Pareto front over (n, codewords, d_lee): no surviving record is
    /// matched or beaten on all three by another, in first-found order.
    pub records: Vec<SearchRecord>,
}

const SEARCH_NOTE_CAP: usize = 20;

struct SearchState {
    visited: u64,
    skipped: u64,
    errors: u64,
    notes: Vec<String>,
    suppressed: u64,
    front: Vec<SearchRecord>,
}

impl SearchState {
    fn new() -> Self {
        Self {
            visited: 0,
            skipped: 0,
            errors: 0,
            notes: Vec::new(),
            suppressed: 0,
            front: Vec::new(),
        }
    }

    fn note(&mut self, text: String) {
        if self.notes.len() < SEARCH_NOTE_CAP {
            self.notes.push(text);
        } else {
            self.suppressed += 1;
        }
    }

    /// Weak dominance: at least as short, at least as many codewords,
    /// at least the distance. Equal keys count, so the first record
    /// with a key keeps its place.
    fn dominates(a: &SearchRecord, b: &SearchRecord) -> bool {
        a.n <= b.n && a.codewords >= b.codewords && a.d_lee >= b.d_lee
    }

    fn offer(&mut self, record: SearchRecord) {
        if self.front.iter().any(|f| Self::dominates(f, &record)) {
            return;
        }
        self.front.retain(|f| !Self::dominates(&record, f));
        self.front.push(record);
    }

    fn evaluate(&mut self, cfg: &SearchConfig, g: &SkewPoly, n: usize, k: KSpec) {
        self.visited += 1;
        let code = match k {
            KSpec::Free => match RCode::free_from_divisor(g, n) {
                Ok(code) => code,
                Err(Error::NotARightDivisor) => {
                    self.skipped += 1;
                    return;
                }
                Err(e) => {
                    self.errors += 1;
                    self.note(format!("{g} (n={n}): {e}"));
                    return;
                }
            },
            KSpec::Shifts(k) => RCode::from_shifts(g, n, k),
        };
        for &sel in &cfg.selections {
            let z4 = derived_code(&code, sel);
            match distance::params(&z4, cfg.bound, cfg.threads) {
                Ok(p) => self.offer(SearchRecord {
                    generator: g.to_string(),
                    derivation: cfg.kind.to_string(),
                    selector: sel.as_str().to_string(),
                    block_length: n,
                    k: k.to_string(),
                    n: p.n,
                    k1: p.k1,
                    k2: p.k2,
                    d_lee: p.d_lee,
                    codewords: z4.codeword_count(),
                }),
                Err(e) => {
                    self.errors += 1;
                    self.note(format!("{g} (n={n}, k={k}, {sel}): {e}"));
                }
            }
        }
    }
}

/// Enumerate or sample generator polynomials and keep the Pareto front
/// of the derived codes. The same config and seed always produce the
/// same report.
pub fn run_search(cfg: &SearchConfig) -> SearchReport {
    let elems: Vec<RingElem> = RingElem::all().collect();
    // Free codes need a unit leading coefficient, so only those leads
    // are worth visiting; spans accept any nonzero lead.
    let leads: Vec<RingElem> = match cfg.k {
        KRange::Free => elems.iter().copied().filter(|e| e.is_unit()).collect(),
        KRange::Shifts { .. } => elems.iter().copied().filter(|e| !e.is_zero()).collect(),
    };
    let mut state = SearchState::new();
    match cfg.samples {
        None => exhaustive(cfg, &elems, &leads, &mut state),
        Some(samples) => sampled(cfg, &elems, &leads, samples, &mut state),
    }
    if state.suppressed > 0 {
        let n = state.suppressed;
        state.notes.push(format!("{n} further notes suppressed"));
    }
    SearchReport {
        config: SearchEcho {
            n: format!("{}..{}", cfg.n_lo, cfg.n_hi),
            degree: format!("{}..{}", cfg.deg_lo, cfg.deg_hi),
            k: cfg.k.to_string(),
            derivation: cfg.kind.to_string(),
            selectors: cfg.selections.iter().map(|s| s.to_string()).collect(),
            seed: cfg.seed,
            samples: cfg.samples,
            bound: cfg.bound,
        },
        visited: state.visited,
        skipped: state.skipped,
        errors: state.errors,
        notes: state.notes,
        records: state.front,
    }
}

fn k_values(k: KRange, n: usize) -> Vec<KSpec> {
    match k {
        KRange::Free => vec![KSpec::Free],
        KRange::Shifts { lo, hi } => (lo.max(1)..=hi.min(n)).map(KSpec::Shifts).collect(),
    }
}

fn exhaustive(cfg: &SearchConfig, elems: &[RingElem], leads: &[RingElem], state: &mut SearchState) {
    for n in cfg.n_lo..=cfg.n_hi {
        for deg in cfg.deg_lo..=cfg.deg_hi.min(n) {
            let ks = k_values(cfg.k, n);
            if ks.is_empty() {
                continue;
            }
            // Odometer over the deg low coefficients, lowest fastest.
            for &lead in leads {
                let mut digits = vec![0usize; deg];
                loop {
                    let mut coeffs: Vec<RingElem> = digits.iter().map(|&d| elems[d]).collect();
                    coeffs.push(lead);
                    let g = SkewPoly::new(coeffs, cfg.kind);
                    for &k in &ks {
                        state.evaluate(cfg, &g, n, k);
                    }
                    let mut pos = 0;
                    while pos < digits.len() {
                        digits[pos] += 1;
                        if digits[pos] < elems.len() {
                            break;
                        }
                        digits[pos] = 0;
                        pos += 1;
                    }
                    if pos == digits.len() {
                        break;
                    }
                }
            }
        }
    }
}

fn sampled(
    cfg: &SearchConfig,
    elems: &[RingElem],
    leads: &[RingElem],
    samples: u64,
    state: &mut SearchState,
) {
    if cfg.n_lo > cfg.n_hi || cfg.deg_lo > cfg.deg_hi {
        return;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..samples {
        let n = rng.gen_range(cfg.n_lo..=cfg.n_hi);
        let deg_hi = cfg.deg_hi.min(n);
        if cfg.deg_lo > deg_hi {
            state.visited += 1;
            state.skipped += 1;
            continue;
        }
        let deg = rng.gen_range(cfg.deg_lo..=deg_hi);
        let mut coeffs: Vec<RingElem> = (0..deg)
            .map(|_| elems[rng.gen_range(0..elems.len())])
            .collect();
        coeffs.push(leads[rng.gen_range(0..leads.len())]);
        let g = SkewPoly::new(coeffs, cfg.kind);
        let k = match cfg.k {
            KRange::Free => KSpec::Free,
            KRange::Shifts { lo, hi } => {
                let hi = hi.min(n);
                if lo > hi {
                    state.visited += 1;
                    state.skipped += 1;
                    continue;
                }
                KSpec::Shifts(rng.gen_range(lo.max(1)..=hi))
            }
        };
        state.evaluate(cfg, &g, n, k);
    }
}

// ---------------------------------------------------------------------
// ideals and center check

#[derive(Clone, Debug, Serialize)]
pub struct IdealRow {
    pub generator: String,
    pub cardinality: usize,
    pub maximal: bool,
    pub elements: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealsReport {
    pub ideals: Vec<IdealRow>,
}

pub fn ideals_report() -> IdealsReport {
    IdealsReport {
        ideals: nontrivial_ideals()
            .into_iter()
            .map(|ideal| IdealRow {
                generator: ideal.generator.to_string(),
                cardinality: ideal.elements.len(),
                maximal: ideal.is_maximal,
                elements: ideal.elements.iter().map(|e| e.to_string()).collect(),
            })
            .collect(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub element: String,
    pub commutator: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CenterReport {
    pub polynomial: String,
    pub derivation: String,
    pub central: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Centrality of a polynomial, with a non-commuting witness when it is
/// not central. Commuting with the constant v and with x already forces
/// commuting with everything, so witnesses are drawn from those two.
pub fn center_report(p: &SkewPoly) -> CenterReport {
    let kind = p.kind();
    let central = p.is_central();
    let mut witness = None;
    if !central {
        let candidates = [
            ("v", SkewPoly::constant(RingElem::V, kind)),
            ("x", SkewPoly::monomial(RingElem::ONE, 1, kind)),
        ];
        for (name, q) in candidates {
            let left = p.mul(&q).expect("same derivation kind");
            let right = q.mul(p).expect("same derivation kind");
            let comm = left.sub(&right).expect("same derivation kind");
            if !comm.is_zero() {
                witness = Some(Witness {
                    element: name.to_string(),
                    commutator: comm.to_string(),
                });
                break;
            }
        }
    }
    CenterReport {
        polynomial: p.to_string(),
        derivation: kind.to_string(),
        central,
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse;

    const K1: DerivationKind = DerivationKind::OnePlus2v;

    fn bundled_subset(labels: &[&str]) -> Manifest {
        let mut m = Manifest::bundled();
        m.entries.retain(|e| labels.contains(&e.label.as_str()));
        assert_eq!(m.entries.len(), labels.len());
        m
    }

    #[test]
    fn verify_passes_on_small_bundled_entries() {
        let m = bundled_subset(&["free-01", "span-01", "span-02", "span-alt-derivation"]);
        let report = run_verify(&m, u64::MAX, 2);
        assert!(report.ok(), "{:?}", report.checks);
        assert_eq!(report.total, 9);
        assert_eq!(report.passed, 9);
        let selectors: Vec<&str> = report.checks.iter().map(|c| c.selector.as_str()).collect();
        assert_eq!(
            selectors,
            ["gray", "res", "tor", "plotkin-res", "res", "plotkin-res", "res", "plotkin-res", "tor"]
        );
    }

    #[test]
    fn verify_flags_a_wrong_distance() {
        let mut m = bundled_subset(&["free-01"]);
        m.entries[0].expected.gray.as_mut().unwrap().d_lee = 3;
        let report = run_verify(&m, u64::MAX, 1);
        assert!(!report.ok());
        assert_eq!(report.failed, 1);
        assert_eq!(report.passed, 3);
        let bad = report
            .checks
            .iter()
            .find(|c| c.status == CheckStatus::Fail)
            .unwrap();
        assert_eq!(bad.selector, "gray");
        assert!(bad.message.as_ref().unwrap().contains("expected"));
    }

    #[test]
    fn verify_reports_an_unbuildable_entry_as_errors() {
        let mut m = bundled_subset(&["free-01"]);
        // x leaves remainder -1 on dividing x^4 - 1, so free mode cannot
        // build a code from it.
        m.entries[0].generator = "x".to_string();
        let report = run_verify(&m, u64::MAX, 1);
        assert_eq!(report.errors, 4);
        assert!(report.checks[0]
            .message
            .as_ref()
            .unwrap()
            .contains("building code"));
    }

    #[test]
    fn analyze_reports_divisor_diagnostics_and_params() {
        let g = parse::poly("3+x", K1).unwrap();
        let report = run_analyze(&AnalyzeConfig {
            generator: g,
            n: 4,
            k: KSpec::Free,
            selections: Selection::ALL.to_vec(),
            bound: u64::MAX,
            threads: 2,
            span_limit: 1 << 20,
        })
        .unwrap();
        assert!(report.is_right_divisor);
        assert_eq!(report.check_polynomial.as_deref(), Some("1+x+x^2+x^3"));
        // The cofactor has nonzero odd-degree coefficients, so it sits
        // outside the center even though x^4 - 1 itself is central.
        assert_eq!(report.check_polynomial_central, Some(false));
        assert_eq!(report.free_rank, Some(3));
        assert_eq!(report.span_size, Some(4096));
        let closure = report.closure.as_ref().unwrap();
        assert!(closure.twisted_shift_closed);
        assert!(closure.quasicyclic_2);
        assert!(report.ok());
        let gray = &report.derived[0];
        assert_eq!(gray.selector, "gray");
        assert_eq!(gray.params.unwrap().to_string(), "[8, 4^6 2^0, 2]");
        assert_eq!(gray.codewords, Some(4096));
    }

    #[test]
    fn analyze_rejects_free_mode_on_a_non_divisor() {
        let g = parse::poly("x", K1).unwrap();
        let err = run_analyze(&AnalyzeConfig {
            generator: g,
            n: 4,
            k: KSpec::Free,
            selections: vec![Selection::Gray],
            bound: u64::MAX,
            threads: 1,
            span_limit: 1 << 20,
        })
        .unwrap_err();
        assert_eq!(err, Error::NotARightDivisor);
    }

    #[test]
    fn analyze_skips_closure_when_the_span_is_too_big() {
        let g = parse::poly("3+x", K1).unwrap();
        let report = run_analyze(&AnalyzeConfig {
            generator: g,
            n: 4,
            k: KSpec::Shifts(3),
            selections: vec![Selection::Res],
            bound: u64::MAX,
            threads: 1,
            span_limit: 16,
        })
        .unwrap();
        assert!(report.closure.is_none());
        assert!(report.notes[0].contains("skipped"));
        assert!(report.ok());
    }

    #[test]
    fn analyze_records_per_selection_errors_without_failing() {
        // The zero-rank free code from x^2 - 1 itself derives only zero
        // codes, whose distance is undefined.
        let g = parse::poly("3+x^2", K1).unwrap();
        let report = run_analyze(&AnalyzeConfig {
            generator: g,
            n: 2,
            k: KSpec::Free,
            selections: vec![Selection::Gray],
            bound: u64::MAX,
            threads: 1,
            span_limit: 1 << 20,
        })
        .unwrap();
        assert_eq!(report.free_rank, Some(0));
        assert!(!report.ok());
        assert!(report.derived[0].error.is_some());
    }

    #[test]
    fn exhaustive_search_counts_every_candidate() {
        let report = run_search(&SearchConfig {
            n_lo: 4,
            n_hi: 4,
            deg_lo: 1,
            deg_hi: 1,
            k: KRange::Free,
            kind: K1,
            selections: vec![Selection::Gray],
            seed: 0,
            samples: None,
            bound: u64::MAX,
            threads: 2,
        });
        // 4 unit leads times 16 constant terms.
        assert_eq!(report.visited, 64);
        assert!(report.skipped > 0, "x alone is not a divisor");
        assert!(report.skipped < 64, "3+x is a divisor");
        assert!(report
            .records
            .iter()
            .any(|r| (r.n, r.k1, r.k2, r.d_lee) == (8, 6, 0, 2)));
    }

    #[test]
    fn search_front_drops_dominated_records() {
        let report = run_search(&SearchConfig {
            n_lo: 2,
            n_hi: 4,
            deg_lo: 1,
            deg_hi: 1,
            k: KRange::Free,
            kind: K1,
            selections: vec![Selection::Res],
            seed: 0,
            samples: None,
            bound: u64::MAX,
            threads: 1,
        });
        assert!(!report.records.is_empty());
        for (i, a) in report.records.iter().enumerate() {
            for (j, b) in report.records.iter().enumerate() {
                if i != j {
                    assert!(!SearchState::dominates(a, b), "{a:?} dominates {b:?}");
                }
            }
        }
    }

    #[test]
    fn empty_degree_range_yields_an_empty_stream() {
        let base = || SearchConfig {
            n_lo: 4,
            n_hi: 4,
            deg_lo: 3,
            deg_hi: 2,
            k: KRange::Free,
            kind: K1,
            selections: vec![Selection::Gray],
            seed: 7,
            samples: None,
            bound: u64::MAX,
            threads: 1,
        };
        let report = run_search(&base());
        assert_eq!(report.visited, 0);
        assert!(report.records.is_empty());
        let sampled = run_search(&SearchConfig {
            samples: Some(50),
            ..base()
        });
        assert!(sampled.records.is_empty());
    }

    #[test]
    fn sampled_search_is_deterministic() {
        let cfg = || SearchConfig {
            n_lo: 2,
            n_hi: 5,
            deg_lo: 1,
            deg_hi: 2,
            k: KRange::Shifts { lo: 1, hi: 3 },
            kind: DerivationKind::ThreePlus2v,
            selections: vec![Selection::Res, Selection::Tor],
            seed: 42,
            samples: Some(200),
            bound: u64::MAX,
            threads: 2,
        };
        let a = run_search(&cfg());
        let b = run_search(&cfg());
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        assert_eq!(a.visited, 200);
        let c = run_search(&SearchConfig { seed: 43, ..cfg() });
        assert_ne!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&c).unwrap(),
            "a different seed should explore differently"
        );
    }

    #[test]
    fn selection_lists_parse_and_expand() {
        assert_eq!(Selection::parse_list(&[]).unwrap(), Selection::ALL.to_vec());
        assert_eq!(
            Selection::parse_list(&["plotkin".into()]).unwrap(),
            vec![Selection::PlotkinRes, Selection::PlotkinTor]
        );
        assert_eq!(
            Selection::parse_list(&["tor,gray".into(), "gray".into()]).unwrap(),
            vec![Selection::Gray, Selection::Tor]
        );
        assert!(Selection::parse_list(&["grey".into()]).is_err());
    }

    #[test]
    fn ideals_report_matches_the_ring() {
        let report = ideals_report();
        assert_eq!(report.ideals.len(), 7);
        assert_eq!(report.ideals[0].generator, "2v");
        assert_eq!(report.ideals[0].elements, ["0", "2v"]);
        assert_eq!(report.ideals.iter().filter(|i| i.maximal).count(), 2);
    }

    #[test]
    fn center_report_gives_witnesses() {
        let central = center_report(&parse::poly("3+x^2", K1).unwrap());
        assert!(central.central);
        assert!(central.witness.is_none());
        let not_v = center_report(&parse::poly("v", K1).unwrap());
        assert!(!not_v.central);
        assert_eq!(not_v.witness.unwrap().element, "x");
        let not_x = center_report(&parse::poly("x", K1).unwrap());
        assert!(!not_x.central);
        assert_eq!(not_x.witness.unwrap().element, "v");
    }
}
