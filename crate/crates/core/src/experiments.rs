//! Seeded randomized experiments and deterministic sweeps over the explicit families.
//!
//! Every random trial draws from its own ChaCha stream: `seed` fixes the key and the trial
//! number (plus, for multi-degree runs, the degree) fixes the stream, so any outcome row can
//! be re-run on its own with the `*_trial` functions.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::altpf::{h_even, h_odd, sub_pfaffians, v_j, AltMatrix};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::{ann, dual_socle_form, random_form, GradedIdeal, InverseSystem};
use crate::koszul::{betti, tor_dim_via_theta, BettiTable};
use crate::poly::{DualForm, Monomial, Poly, NVARS};
use crate::tables;
use crate::tor::{check_tormins, invariants, TorClassLabel};
use crate::trimres::{build_complex, TrimInput};

pub const GENERIC_MIN_PRIME: u32 = 32003;

/// Deterministic generator for one trial.
pub fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub experiment: String,
    pub s: Option<u32>,
    pub degrees: Option<Vec<u32>>,
    pub p: u32,
    pub trials: usize,
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutcomeKind {
    /// random sample; counts towards the pass threshold
    Trial,
    /// deterministic construction; must pass
    Control,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialOutcome {
    pub kind: OutcomeKind,
    pub case: String,
    pub trial: Option<usize>,
    pub seed: Option<u64>,
    pub stream: Option<u64>,
    /// false for samples rejected by a filter; they are neither passes nor failures
    pub retained: bool,
    pub pass: bool,
    pub detail: String,
}

impl TrialOutcome {
    fn control(case: impl Into<String>, pass: bool, detail: String) -> Self {
        TrialOutcome { kind: OutcomeKind::Control, case: case.into(), trial: None, seed: None, stream: None, retained: true, pass, detail }
    }

    fn trial(case: impl Into<String>, trial: usize, seed: u64, stream: u64) -> Self {
        TrialOutcome { kind: OutcomeKind::Trial, case: case.into(), trial: Some(trial), seed: Some(seed), stream: Some(stream), retained: true, pass: false, detail: String::new() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    pub outcomes: Vec<TrialOutcome>,
    pub trials_retained: usize,
    pub trials_passed: usize,
    /// minimum number of passing retained trials for the run to count as a success
    pub required: usize,
    pub controls: usize,
    pub controls_passed: usize,
    pub tallies: BTreeMap<String, usize>,
    pub notes: Vec<String>,
}

impl ExperimentReport {
    fn new(config: ExperimentConfig, outcomes: Vec<TrialOutcome>, required: impl Fn(usize) -> usize) -> Self {
        let trials: Vec<&TrialOutcome> = outcomes.iter().filter(|o| o.kind == OutcomeKind::Trial && o.retained).collect();
        let trials_retained = trials.len();
        let trials_passed = trials.iter().filter(|o| o.pass).count();
        let controls = outcomes.iter().filter(|o| o.kind == OutcomeKind::Control).count();
        let controls_passed = outcomes.iter().filter(|o| o.kind == OutcomeKind::Control && o.pass).count();
        ExperimentReport {
            config,
            required: required(trials_retained),
            outcomes,
            trials_retained,
            trials_passed,
            controls,
            controls_passed,
            tallies: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.trials_passed >= self.required && self.controls_passed == self.controls
    }

    pub fn failures(&self) -> impl Iterator<Item = &TrialOutcome> {
        self.outcomes.iter().filter(|o| o.retained && !o.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["experiment", "kind", "case", "trial", "seed", "stream", "retained", "pass", "detail"])?;
        let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
        for o in &self.outcomes {
            let kind = match o.kind {
                OutcomeKind::Trial => "trial",
                OutcomeKind::Control => "control",
            };
            w.write_record([
                self.config.experiment.as_str(),
                kind,
                &o.case,
                &opt(o.trial.map(|t| t as u64)),
                &opt(o.seed),
                &opt(o.stream),
                &o.retained.to_string(),
                &o.pass.to_string(),
                &o.detail,
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Csv(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_text(&self) -> String {
        let c = &self.config;
        let mut out = format!("experiment {} (p = {}", c.experiment, c.p);
        if let Some(s) = c.s {
            out += &format!(", s = {s}");
        }
        if let Some(d) = &c.degrees {
            out += &format!(", degrees = {d:?}");
        }
        if let Some(seed) = c.seed {
            out += &format!(", trials = {}, seed = {seed}", c.trials);
        }
        out += ")\n";
        for o in &self.outcomes {
            let status = if !o.retained {
                "skip"
            } else if o.pass {
                "pass"
            } else {
                "FAIL"
            };
            let id = match (o.trial, o.stream) {
                (Some(t), Some(st)) => format!("{} #{t} (stream {st})", o.case),
                _ => o.case.clone(),
            };
            out += &format!("  [{status}] {id}: {}\n", o.detail);
        }
        if self.trials_retained > 0 || c.trials > 0 {
            out += &format!("trials: {}/{} retained passed (required {})\n", self.trials_passed, self.trials_retained, self.required);
        }
        if self.controls > 0 {
            out += &format!("controls: {}/{} passed\n", self.controls_passed, self.controls);
        }
        for (k, v) in &self.tallies {
            out += &format!("  tally {k}: {v}\n");
        }
        for n in &self.notes {
            out += &format!("note: {n}\n");
        }
        out += if self.ok() { "result: ok\n" } else { "result: MISMATCH\n" };
        out
    }
}

fn pf_ideal(m: &AltMatrix) -> Result<GradedIdeal> {
    GradedIdeal::new(m.field(), sub_pfaffians(m)?.pf)
}

fn compact(t: &BettiTable) -> String {
    t.to_compact()
}

// ---------------------------------------------------------------------------------------
// generic Betti tables

/// One sample of [`generic_betti`]: a uniform form of degree `2s - 1` and the Betti table of
/// its apolarity ideal compared with the parity table.
pub fn generic_betti_trial(field: Field, s: u32, seed: u64, trial: usize) -> TrialOutcome {
    let stream = trial as u64;
    let mut out = TrialOutcome::trial("random form", trial, seed, stream);
    let mut rng = trial_rng(seed, stream);
    let phi = random_form(field, 2 * s - 1, &mut rng);
    match form_betti(&phi, s) {
        Ok(t) => {
            out.pass = t == tables::gorenstein_generic(s);
            out.detail = compact(&t);
        }
        Err(e) => out.detail = format!("error: {e}"),
    }
    out
}

fn form_betti(phi: &DualForm, s: u32) -> Result<BettiTable> {
    let i = ann(&InverseSystem::single(phi.clone())?, 2 * s);
    betti(&i, 2 * s + 1)
}

/// Samples forms of degree `2s - 1` and compares `betti(ann φ)` with the parity table. The
/// control row takes the dual generator of the explicit Pfaffian ideal of the same parity.
pub fn generic_betti(field: Field, s: u32, trials: usize, seed: u64) -> Result<ExperimentReport> {
    if s < 2 {
        return Err(Error::Precondition(format!("generic_betti needs s >= 2, got {s}")));
    }
    if field.p() < GENERIC_MIN_PRIME {
        return Err(Error::Precondition(format!("generic sampling needs p >= {GENERIC_MIN_PRIME}, got {}", field.p())));
    }
    let mut outcomes: Vec<TrialOutcome> = (0..trials).into_par_iter().map(|k| generic_betti_trial(field, s, seed, k)).collect();
    outcomes.push(explicit_form_control(field, s));
    let config = ExperimentConfig { experiment: "generic-betti".into(), s: Some(s), degrees: None, p: field.p(), trials, seed: Some(seed) };
    let mut report = ExperimentReport::new(config, outcomes, |n| n.saturating_sub(n / 20));
    report.notes.push(format!("expected table: {}", compact(&tables::gorenstein_generic(s))));
    report.notes.push("the claim holds on a dense open set; up to 5% of samples may miss it".into());
    Ok(report)
}

fn explicit_form_control(field: Field, s: u32) -> TrialOutcome {
    let (name, m) = if s % 2 == 0 { ("Hev", h_even(field, s as usize)) } else { ("Hodd", h_odd(field, s as usize)) };
    let case = format!("dual generator of Pf({name}_{s})");
    let run = || -> Result<(bool, String)> {
        let k = pf_ideal(&m?)?;
        let phi = dual_socle_form(&k, 2 * s - 1)?;
        let t = form_betti(&phi, s)?;
        let same = ann(&InverseSystem::single(phi)?, 2 * s).same_ideal(&k);
        Ok((same && t == tables::gorenstein_generic(s), format!("ann recovers ideal: {same}; {}", compact(&t))))
    };
    match run() {
        Ok((pass, detail)) => TrialOutcome::control(case, pass, detail),
        Err(e) => TrialOutcome::control(case, false, format!("error: {e}")),
    }
}

// ---------------------------------------------------------------------------------------
// realizability of G(r)

/// An explicit trimmed Pfaffian ideal whose class should be `G(r)`.
#[derive(Clone, Debug)]
pub struct Recipe {
    pub s: u32,
    pub r: u32,
    pub label: String,
    pub matrix: AltMatrix,
    /// 1-based position of the trimmed generator
    pub index: usize,
}

impl Recipe {
    pub fn input(&self) -> Result<TrimInput> {
        TrimInput::new(self.matrix.clone(), self.index)
    }
}

/// Construction realizing class `G(r)` with socle `k(-s) ⊕ k(-2s+1)`, `s ≤ r ≤ 2s - 1`:
/// - `r = 2s - 1`: `V_s^s` trimmed at `s + 1`;
/// - `r = s` even: the even Hankel-type matrix trimmed at 1;
/// - other even `r`: `V_{r/2}^{r-s}` trimmed at `r/2 + 1`;
/// - other odd `r`: `V_{(r+1)/2}^{r+1-s}` trimmed at `r + 2 - s`.
pub fn realizability_recipe(field: Field, s: u32, r: u32) -> Result<Recipe> {
    if s < 3 || r < s || r > 2 * s - 1 {
        return Err(Error::Precondition(format!("need s >= 3 and s <= r <= 2s-1, got s={s}, r={r}")));
    }
    let vj = |m: u32, j: u32, index: u32| -> Result<Recipe> {
        Ok(Recipe { s, r, label: format!("V_{m}^{j}"), matrix: v_j(field, m as usize, j as usize)?, index: index as usize })
    };
    if r == 2 * s - 1 {
        vj(s, s, s + 1)
    } else if r == s && s % 2 == 0 {
        Ok(Recipe { s, r, label: format!("Hev_{s}"), matrix: h_even(field, s as usize)?, index: 1 })
    } else if r % 2 == 0 {
        vj(r / 2, r - s, r / 2 + 1)
    } else {
        vj((r + 1) / 2, r + 1 - s, r + 2 - s)
    }
}

/// Full certification of one recipe: socle, compressedness, class, the class-from-μ rule,
/// and exactness of the explicit complex through degree `3s + 3`.
pub fn certify_recipe(recipe: &Recipe) -> Result<(bool, String)> {
    let s = recipe.s;
    let input = recipe.input()?;
    let ideal = input.trimmed_ideal();
    let wanted = BTreeMap::from([(s, 1usize), (2 * s - 1, 1)]);
    let socle = ideal.socle_type(2 * s + 1)?;
    let compressed = socle == wanted && ideal.is_compressed(&wanted)?;
    let inv = invariants(&ideal, 2 * s + 1)?;
    let tormins = socle == wanted && compressed && check_tormins(&ideal, s)?;
    let complex = build_complex(&input)?;
    let exact = complex.verify_exactness(3 * s + 3).exact;
    let mu_ok = input.predicted_mu() == inv.mu;
    let pass = socle == wanted && compressed && inv.class == TorClassLabel::G(recipe.r as usize) && tormins && exact && mu_ok;
    let detail = format!(
        "{} trimmed at {}: socle {:?}, compressed {compressed}, mu {} (predicted {}), class {}, tormins {tormins}, exact {exact}",
        recipe.label,
        recipe.index,
        socle,
        inv.mu,
        input.predicted_mu(),
        inv.class
    );
    Ok((pass, detail))
}

/// Builds and certifies the `G(r)` construction for every `s ≤ r ≤ 2s - 1`.
pub fn realizability_sweep(field: Field, s: u32) -> Result<ExperimentReport> {
    if s < 3 {
        return Err(Error::Precondition(format!("realizability_sweep needs s >= 3, got {s}")));
    }
    let outcomes: Vec<TrialOutcome> = (s..=2 * s - 1)
        .into_par_iter()
        .map(|r| {
            let case = format!("G({r})");
            match realizability_recipe(field, s, r).and_then(|rc| certify_recipe(&rc)) {
                Ok((pass, detail)) => TrialOutcome::control(case, pass, detail),
                Err(e) => TrialOutcome::control(case, false, format!("error: {e}")),
            }
        })
        .collect();
    let config = ExperimentConfig { experiment: "realizability".into(), s: Some(s), degrees: None, p: field.p(), trials: 0, seed: None };
    Ok(ExperimentReport::new(config, outcomes, |_| 0))
}

// ---------------------------------------------------------------------------------------
// even socle degree

/// Alternating matrix of the given size with independent uniform linear entries.
pub fn random_linear_alternating(field: Field, size: usize, rng: &mut impl Rng) -> AltMatrix {
    let mut m = AltMatrix::zero(field, size);
    for i in 0..size {
        for j in i + 1..size {
            let terms = (0..NVARS).map(|v| (Monomial::var(v), rng.gen_range(0..field.p()) as i64));
            m.set(i, j, Poly::from_terms(field, terms));
        }
    }
    m
}

/// One sample of [`even_socle_study`]. Returns the outcome and, for retained samples, the
/// `(μ, class)` of the trim.
pub fn even_socle_trial(field: Field, s: u32, seed: u64, trial: usize) -> (TrialOutcome, Option<(usize, TorClassLabel)>) {
    let stream = trial as u64;
    let mut out = TrialOutcome::trial("random linear matrix", trial, seed, stream);
    let mut rng = trial_rng(seed, stream);
    let size = 2 * s as usize + 1;
    let m = random_linear_alternating(field, size, &mut rng);
    let reject = |mut out: TrialOutcome, why: String| {
        out.retained = false;
        out.detail = why;
        (out, None)
    };
    let Ok(input) = TrimInput::new(m, size) else {
        return reject(out, "degenerate Pfaffians".into());
    };
    let gor = input.pfaffian_ideal();
    match gor.socle_type(2 * s) {
        Ok(st) if st == BTreeMap::from([(2 * s - 2, 1)]) => {}
        Ok(st) => return reject(out, format!("Gorenstein socle {st:?}")),
        Err(e) => return reject(out, format!("not Artinian: {e}")),
    }
    match betti(&gor, 2 * s) {
        Ok(t) if t == tables::even_socle_gorenstein(s) => {}
        Ok(t) => return reject(out, format!("Gorenstein table {}", compact(&t))),
        Err(e) => return reject(out, format!("error: {e}")),
    }

    let run = || -> Result<(bool, String, (usize, TorClassLabel))> {
        let ideal = input.trimmed_ideal();
        let wanted = BTreeMap::from([(s, 1usize), (2 * s - 2, 1)]);
        let socle = ideal.socle_type(2 * s)?;
        let compressed = socle == wanted && ideal.is_compressed(&wanted)?;
        let inv = invariants(&ideal, 2 * s)?;
        let r_ok = matches!(inv.class, TorClassLabel::G(r) if (2 * s as usize - 3..=2 * s as usize - 1).contains(&r));
        let mu_ok = inv.mu == 2 * s as usize || inv.mu == 2 * s as usize + 1;
        let pass = socle == wanted && compressed && r_ok && mu_ok && input.predicted_mu() == inv.mu;
        let detail = format!("b1,{s}={}; trim: mu {}, socle {socle:?}, compressed {compressed}, class {}", tables::even_socle_gorenstein(s).get(1, s), inv.mu, inv.class);
        Ok((pass, detail, (inv.mu, inv.class)))
    };
    match run() {
        Ok((pass, detail, key)) => {
            out.pass = pass;
            out.detail = detail;
            (out, Some(key))
        }
        Err(e) => {
            out.detail = format!("error: {e}");
            (out, None)
        }
    }
}

/// Filters random linear `(2s+1)`-square alternating matrices down to those whose Gorenstein
/// ideal has socle degree `2s - 2` and the expected table, trims the last generator, checks
/// the trim and tallies the `(μ, class)` pairs seen.
pub fn even_socle_study(field: Field, s: u32, trials: usize, seed: u64) -> Result<ExperimentReport> {
    if s < 3 {
        return Err(Error::Precondition(format!("even_socle_study needs s >= 3, got {s}")));
    }
    let results: Vec<_> = (0..trials).into_par_iter().map(|k| even_socle_trial(field, s, seed, k)).collect();
    let mut tallies = BTreeMap::new();
    for key in results.iter().filter_map(|(_, k)| *k) {
        *tallies.entry(format!("mu={} {}", key.0, key.1)).or_insert(0) += 1;
    }
    let outcomes = results.into_iter().map(|(o, _)| o).collect();
    let config = ExperimentConfig { experiment: "even-socle".into(), s: Some(s), degrees: None, p: field.p(), trials, seed: Some(seed) };
    let mut report = ExperimentReport::new(config, outcomes, |n| n);
    report.tallies = tallies;
    if report.trials_retained == 0 {
        report.notes.push(format!("no sample passed the filter in {trials} attempts"));
    }
    report.notes.push("tallies are observations only; they do not decide which pairs can occur".into());
    Ok(report)
}

// ---------------------------------------------------------------------------------------
// Θ-rank formula versus Koszul homology

fn theta_compare(phi: &DualForm, oracle: &dyn Fn(usize, u32) -> Result<usize>) -> Result<(bool, String)> {
    let mut pass = true;
    let mut parts = Vec::new();
    for i in [2usize, 3] {
        let (via_theta, j) = tor_dim_via_theta(phi, i)?;
        let direct = oracle(i, j)?;
        pass &= via_theta == direct as i64;
        parts.push(format!("tor{i},{j}: theta {via_theta} koszul {direct}"));
    }
    Ok((pass, parts.join("; ")))
}

/// One random form of degree `degree` in [`theta_crosscheck`].
pub fn theta_trial(field: Field, degree: u32, seed: u64, trial: usize) -> TrialOutcome {
    let stream = ((degree as u64) << 32) | trial as u64;
    let mut out = TrialOutcome::trial(format!("degree {degree}"), trial, seed, stream);
    let mut rng = trial_rng(seed, stream);
    let phi = random_form(field, degree, &mut rng);
    if phi.is_zero() {
        out.retained = false;
        out.detail = "zero form".into();
        return out;
    }
    let run = || -> Result<(bool, String)> {
        let t = betti(&ann(&InverseSystem::single(phi.clone())?, degree + 1), degree + 2)?;
        theta_compare(&phi, &|i, j| Ok(t.get(i, j)))
    };
    match run() {
        Ok((pass, detail)) => {
            out.pass = pass;
            out.detail = detail;
        }
        Err(e) => out.detail = format!("error: {e}"),
    }
    out
}

/// Monomial stress forms of a degree: pure power, two-variable, and most balanced.
pub fn monomial_stress_forms(degree: u32) -> Vec<[u32; 3]> {
    let d = degree;
    let mut v = vec![[d, 0, 0]];
    if d >= 1 {
        v.push([d - 1, 1, 0]);
    }
    let third = d / 3;
    let balanced = [d - 2 * third, third, third];
    if !v.contains(&balanced) {
        v.push(balanced);
    }
    v
}

fn monomial_control(field: Field, e: [u32; 3]) -> TrialOutcome {
    let [a, b, c] = e;
    let case = format!("X^{a}Y^{b}Z^{c}");
    let run = || -> Result<(bool, String)> {
        let phi = DualForm::monomial(field, Monomial::new(a, b, c));
        let ci = tables::complete_intersection([a + 1, b + 1, c + 1]);
        let ci_ideal = GradedIdeal::parse(field, &[format!("x^{}", a + 1), format!("y^{}", b + 1), format!("z^{}", c + 1)])?;
        let same = ann(&InverseSystem::single(phi.clone())?, a + b + c + 1).same_ideal(&ci_ideal);
        let (pass, detail) = theta_compare(&phi, &|i, j| Ok(ci.get(i, j)))?;
        Ok((pass && same, format!("ann is the complete intersection: {same}; {detail}")))
    };
    match run() {
        Ok((pass, detail)) => TrialOutcome::control(case, pass, detail),
        Err(err) => TrialOutcome::control(case, false, format!("error: {err}")),
    }
}

/// For random forms of each degree, compares the `Θ`-rank formula for `Tor_i` (`i = 2, 3`) in
/// its first strand with the Koszul-homology Betti number. Monomial forms are added as
/// controls against the complete-intersection table.
pub fn theta_crosscheck(field: Field, degrees: &[u32], trials: usize, seed: u64) -> Result<ExperimentReport> {
    if let Some(&d) = degrees.iter().find(|&&d| d == 0) {
        return Err(Error::Precondition(format!("theta_crosscheck needs positive degrees, got {d}")));
    }
    let jobs: Vec<(u32, usize)> = degrees.iter().flat_map(|&d| (0..trials).map(move |k| (d, k))).collect();
    let mut outcomes: Vec<TrialOutcome> = jobs.into_par_iter().map(|(d, k)| theta_trial(field, d, seed, k)).collect();
    let controls: Vec<TrialOutcome> = degrees.iter().flat_map(|&d| monomial_stress_forms(d)).collect::<Vec<_>>().into_par_iter().map(|e| monomial_control(field, e)).collect();
    outcomes.extend(controls);
    let config = ExperimentConfig { experiment: "theta".into(), s: None, degrees: Some(degrees.to_vec()), p: field.p(), trials, seed: Some(seed) };
    Ok(ExperimentReport::new(config, outcomes, |n| n))
}
