//! Truncated-Fock model of the Hamiltonian cascade.
//!
//! Basis: `level ⊗ |n1⟩ ⊗ |n2⟩` with levels `a, b, c, d` and `n_j ≤ cutoff_j`.
//! Stages:
//!
//! | stage  | frame        | atomic support |
//! |--------|--------------|----------------|
//! | `H1`   | interaction  | a, b, c, d     |
//! | `H2`   | interaction  | c, d           |
//! | `H3`   | rotating     | c, d           |
//! | `H4`   | rotating     | c, d           |
//! | `Heff` | rotating     | d              |
//!
//! The rotating frame is reached with `ψ_rot = exp(i H0 t) ψ`, where
//! `H0 = |Ω4|²/Δ4 |c⟩⟨c| + |Ω3|²/Δ3 |d⟩⟨d| + (δ1+δ2)/2 (n1 + n2)`.
//! Every time-dependent stage is stored as
//! `H(t) = H_static + Σ_k (e^{−iω_k t} O_k + h.c.)`.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::oracle::ode::{integrate, DopriOptions, DopriStats};
use crate::params::{derive_effective, SystemParams};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    A = 0,
    B = 1,
    C = 2,
    D = 3,
}

impl Level {
    pub const ALL: [Level; 4] = [Level::A, Level::B, Level::C, Level::D];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stage {
    /// Full four-level interaction Hamiltonian.
    H1,
    /// After eliminating the excited levels.
    H2,
    /// `H2` in the `H0` rotating frame.
    H3,
    /// After eliminating `|c⟩`.
    H4,
    /// Field-only Hamiltonian on `|d⟩`.
    Heff,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Frame {
    Interaction,
    Rotating,
}

impl Stage {
    pub const ALL: [Stage; 5] = [Stage::H1, Stage::H2, Stage::H3, Stage::H4, Stage::Heff];

    pub fn frame(self) -> Frame {
        match self {
            Stage::H1 | Stage::H2 => Frame::Interaction,
            _ => Frame::Rotating,
        }
    }

    pub fn support(self) -> &'static [Level] {
        match self {
            Stage::H1 => &Level::ALL,
            Stage::H2 | Stage::H3 | Stage::H4 => &[Level::C, Level::D],
            Stage::Heff => &[Level::D],
        }
    }

    pub fn is_time_dependent(self) -> bool {
        matches!(self, Stage::H1 | Stage::H2 | Stage::H3)
    }
}

type Triplets = BTreeMap<(usize, usize), Complex64>;

fn add_into(acc: &mut Triplets, other: &Triplets, scale: Complex64) {
    for (&k, &v) in other {
        *acc.entry(k).or_insert(ZERO) += v * scale;
    }
}

fn product(a: &Triplets, b: &Triplets) -> Triplets {
    let mut by_row: BTreeMap<usize, Vec<(usize, Complex64)>> = BTreeMap::new();
    for (&(r, c), &v) in b {
        by_row.entry(r).or_default().push((c, v));
    }
    let mut out = Triplets::new();
    for (&(r, k), &v) in a {
        if let Some(row) = by_row.get(&k) {
            for &(c, w) in row {
                *out.entry((r, c)).or_insert(ZERO) += v * w;
            }
        }
    }
    out
}

fn adjoint(a: &Triplets) -> Triplets {
    a.iter().map(|(&(r, c), &v)| ((c, r), v.conj())).collect()
}

#[derive(Clone, Debug)]
struct Csr {
    indptr: Vec<usize>,
    indices: Vec<usize>,
    values: Vec<Complex64>,
}

impl Csr {
    fn from_triplets(dim: usize, t: &Triplets) -> Self {
        let mut indptr = vec![0; dim + 1];
        let mut indices = Vec::with_capacity(t.len());
        let mut values = Vec::with_capacity(t.len());
        // BTreeMap iterates in row-major order.
        for (&(r, c), &v) in t {
            if v != ZERO {
                indptr[r + 1] += 1;
                indices.push(c);
                values.push(v);
            }
        }
        for i in 0..dim {
            indptr[i + 1] += indptr[i];
        }
        Self {
            indptr,
            indices,
            values,
        }
    }

    #[inline]
    fn apply_add(&self, scale: Complex64, x: &[Complex64], out: &mut [Complex64]) {
        for (r, o) in out.iter_mut().enumerate() {
            let (lo, hi) = (self.indptr[r], self.indptr[r + 1]);
            if lo == hi {
                continue;
            }
            let mut acc = ZERO;
            for k in lo..hi {
                acc += self.values[k] * x[self.indices[k]];
            }
            *o += scale * acc;
        }
    }

    fn nnz(&self) -> usize {
        self.values.len()
    }

    fn to_triplets(&self) -> Triplets {
        let mut t = Triplets::new();
        for r in 0..self.indptr.len() - 1 {
            for k in self.indptr[r]..self.indptr[r + 1] {
                t.insert((r, self.indices[k]), self.values[k]);
            }
        }
        t
    }
}

/// Two-mode Fock space `n_j ≤ cutoff_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct FieldSpace {
    cutoff1: usize,
    cutoff2: usize,
}

impl FieldSpace {
    fn dim(&self) -> usize {
        (self.cutoff1 + 1) * (self.cutoff2 + 1)
    }

    fn index(&self, n1: usize, n2: usize) -> usize {
        n1 * (self.cutoff2 + 1) + n2
    }

    fn build(&self, f: impl Fn(usize, usize) -> Option<(usize, usize, f64)>) -> Triplets {
        let mut t = Triplets::new();
        for n1 in 0..=self.cutoff1 {
            for n2 in 0..=self.cutoff2 {
                if let Some((m1, m2, amp)) = f(n1, n2) {
                    if m1 <= self.cutoff1 && m2 <= self.cutoff2 && amp != 0.0 {
                        t.insert(
                            (self.index(m1, m2), self.index(n1, n2)),
                            Complex64::new(amp, 0.0),
                        );
                    }
                }
            }
        }
        t
    }

    fn identity(&self) -> Triplets {
        self.build(|n1, n2| Some((n1, n2, 1.0)))
    }
    fn a1(&self) -> Triplets {
        self.build(|n1, n2| (n1 > 0).then(|| (n1 - 1, n2, (n1 as f64).sqrt())))
    }
    fn a2(&self) -> Triplets {
        self.build(|n1, n2| (n2 > 0).then(|| (n1, n2 - 1, (n2 as f64).sqrt())))
    }
    fn a1_dag(&self) -> Triplets {
        self.build(|n1, n2| Some((n1 + 1, n2, ((n1 + 1) as f64).sqrt())))
    }
    fn a2_dag(&self) -> Triplets {
        self.build(|n1, n2| Some((n1, n2 + 1, ((n2 + 1) as f64).sqrt())))
    }
    fn n1(&self) -> Triplets {
        self.build(|n1, n2| Some((n1, n2, n1 as f64)))
    }
    fn n2(&self) -> Triplets {
        self.build(|n1, n2| Some((n1, n2, n2 as f64)))
    }
}

fn combo(terms: &[(&Triplets, Complex64)]) -> Triplets {
    let mut out = Triplets::new();
    for (t, s) in terms {
        add_into(&mut out, t, *s);
    }
    out
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

#[derive(Clone, Debug)]
struct RotatingTerm {
    op: Csr,
    adj: Csr,
    freq: f64,
}

/// Initial product state `|level⟩ ⊗ |ε1, ε2⟩`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InitialCondition {
    pub level: Level,
    pub eps1: Complex64,
    pub eps2: Complex64,
}

/// Default photon cutoff `ceil(|ε|² + 6|ε| + 10)` for a coherent amplitude.
pub fn default_cutoff(eps: Complex64) -> usize {
    let a = eps.norm();
    (a * a + 6.0 * a + 10.0).ceil() as usize
}

/// Sparse operator form of one stage of the cascade.
#[derive(Clone, Debug)]
pub struct FockOperatorModel {
    pub cutoff1: usize,
    pub cutoff2: usize,
    pub stage: Stage,
    field: FieldSpace,
    static_part: Csr,
    rotating: Vec<RotatingTerm>,
    /// Diagonal of `H0` on the full space.
    frame_diag: Vec<f64>,
    max_detuning: f64,
}

impl FockOperatorModel {
    pub fn new(
        params: &SystemParams,
        stage: Stage,
        cutoff1: usize,
        cutoff2: usize,
    ) -> Result<Self> {
        let p = params;
        let e = derive_effective(p)?;
        let fs = FieldSpace { cutoff1, cutoff2 };
        let fd = fs.dim();
        let dim = 4 * fd;
        let lift = |op: &Triplets, to: Level, from: Level| -> Triplets {
            op.iter()
                .map(|(&(r, c), &v)| ((to as usize * fd + r, from as usize * fd + c), v))
                .collect()
        };

        let (id, a1, a2, a1d, a2d, n1, n2) = (
            fs.identity(),
            fs.a1(),
            fs.a2(),
            fs.a1_dag(),
            fs.a2_dag(),
            fs.n1(),
            fs.n2(),
        );
        let x = e.raman1(p);
        let y = e.raman2(p);
        let shift = e.mean_shift(p);
        let stark1 = p.g1.norm_sqr() / p.delta1;
        let stark2 = p.g2.norm_sqr() / p.delta2;
        let light_c = p.omega4.norm_sqr() / p.delta4;
        let light_d = p.omega3.norm_sqr() / p.delta3;

        let number_sum = combo(&[(&n1, ONE), (&n2, ONE)]);
        let frame_rotation = || {
            let mut t = Triplets::new();
            for l in Level::ALL {
                add_into(&mut t, &lift(&number_sum, l, l), re(-shift));
            }
            t
        };
        // A = x a1 + y a2†, the |d⟩⟨c| coupling of H3.
        let raman = combo(&[(&a1, x), (&a2d, y)]);

        let mut static_part = Triplets::new();
        let mut rotating: Vec<(Triplets, f64)> = Vec::new();
        match stage {
            Stage::H1 => {
                rotating.push((lift(&combo(&[(&a1, p.g1)]), Level::A, Level::C), p.delta1));
                rotating.push((lift(&combo(&[(&a2, p.g2)]), Level::B, Level::D), p.delta2));
                rotating.push((
                    lift(&combo(&[(&id, p.omega3)]), Level::A, Level::D),
                    p.delta3,
                ));
                rotating.push((
                    lift(&combo(&[(&id, p.omega4)]), Level::B, Level::C),
                    p.delta4,
                ));
            }
            Stage::H2 => {
                add_into(
                    &mut static_part,
                    &lift(
                        &combo(&[(&n1, re(stark1)), (&id, re(light_c))]),
                        Level::C,
                        Level::C,
                    ),
                    ONE,
                );
                add_into(
                    &mut static_part,
                    &lift(
                        &combo(&[(&n2, re(stark2)), (&id, re(light_d))]),
                        Level::D,
                        Level::D,
                    ),
                    ONE,
                );
                // x a1 e^{iδ1 t} |d⟩⟨c| and y a2† e^{−iδ2 t} |d⟩⟨c|
                rotating.push((lift(&combo(&[(&a1, x)]), Level::D, Level::C), -e.delta_s1));
                rotating.push((lift(&combo(&[(&a2d, y)]), Level::D, Level::C), e.delta_s2));
            }
            Stage::H3 | Stage::H4 => {
                add_into(&mut static_part, &frame_rotation(), ONE);
                add_into(&mut static_part, &lift(&n1, Level::C, Level::C), re(stark1));
                add_into(&mut static_part, &lift(&n2, Level::D, Level::D), re(stark2));
                if stage == Stage::H3 {
                    rotating.push((lift(&raman, Level::D, Level::C), -e.delta));
                } else {
                    let raman_dag = adjoint(&raman);
                    let on_d = product(&raman, &raman_dag);
                    let on_c = product(&raman_dag, &raman);
                    add_into(
                        &mut static_part,
                        &lift(&on_d, Level::D, Level::D),
                        re(1.0 / e.delta),
                    );
                    add_into(
                        &mut static_part,
                        &lift(&on_c, Level::C, Level::C),
                        re(-1.0 / e.delta),
                    );
                }
            }
            Stage::Heff => {
                let pair = product(&a1, &a2);
                let pair_dag = product(&a1d, &a2d);
                let h = combo(&[
                    (&n1, re(e.lambda1)),
                    (&n2, re(e.lambda2)),
                    (&pair, e.eta),
                    (&pair_dag, e.eta.conj()),
                ]);
                static_part = lift(&h, Level::D, Level::D);
            }
        }

        let mut frame_diag = vec![0.0; dim];
        for l in Level::ALL {
            let level_shift = match l {
                Level::C => light_c,
                Level::D => light_d,
                _ => 0.0,
            };
            for m1 in 0..=cutoff1 {
                for m2 in 0..=cutoff2 {
                    frame_diag[l as usize * fd + fs.index(m1, m2)] =
                        level_shift + shift * (m1 + m2) as f64;
                }
            }
        }

        let max_detuning = [p.delta1, p.delta2, p.delta3, p.delta4]
            .iter()
            .map(|d| d.abs())
            .fold(0.0, f64::max);
        Ok(Self {
            cutoff1,
            cutoff2,
            stage,
            field: fs,
            static_part: Csr::from_triplets(dim, &static_part),
            rotating: rotating
                .into_iter()
                .map(|(op, freq)| RotatingTerm {
                    adj: Csr::from_triplets(dim, &adjoint(&op)),
                    op: Csr::from_triplets(dim, &op),
                    freq,
                })
                .collect(),
            frame_diag,
            max_detuning,
        })
    }

    pub fn dim(&self) -> usize {
        4 * self.field.dim()
    }

    pub fn index(&self, level: Level, n1: usize, n2: usize) -> usize {
        level as usize * self.field.dim() + self.field.index(n1, n2)
    }

    pub fn nnz(&self) -> usize {
        self.static_part.nnz() + self.rotating.iter().map(|r| 2 * r.op.nnz()).sum::<usize>()
    }

    /// `out = −i H(t) x`.
    pub fn apply(&self, t: f64, x: &[Complex64], out: &mut [Complex64]) {
        out.iter_mut().for_each(|o| *o = ZERO);
        let mi = Complex64::new(0.0, -1.0);
        self.static_part.apply_add(mi, x, out);
        for term in &self.rotating {
            let phase = Complex64::from_polar(1.0, -term.freq * t);
            term.op.apply_add(mi * phase, x, out);
            term.adj.apply_add(mi * phase.conj(), x, out);
        }
    }

    /// `H(t)` as a sparse map.
    pub fn matrix_at(&self, t: f64) -> BTreeMap<(usize, usize), Complex64> {
        let mut h = self.static_part.to_triplets();
        for term in &self.rotating {
            let phase = Complex64::from_polar(1.0, -term.freq * t);
            add_into(&mut h, &term.op.to_triplets(), phase);
            add_into(&mut h, &term.adj.to_triplets(), phase.conj());
        }
        h
    }

    /// `max |H − H†|` at time `t`.
    pub fn hermitian_deviation(&self, t: f64) -> f64 {
        let h = self.matrix_at(t);
        h.iter()
            .map(|(&(r, c), &v)| (v - h.get(&(c, r)).copied().unwrap_or(ZERO).conj()).norm())
            .fold(0.0, f64::max)
    }

    /// `max |[H, n1 − n2]|` entry at `t = 0`.
    pub fn number_difference_commutator(&self) -> f64 {
        let diff = |i: usize| {
            let f = i % self.field.dim();
            let n1 = f / (self.cutoff2 + 1);
            let n2 = f % (self.cutoff2 + 1);
            n1 as f64 - n2 as f64
        };
        self.matrix_at(0.0)
            .iter()
            .map(|(&(r, c), &v)| (v * (diff(c) - diff(r))).norm())
            .fold(0.0, f64::max)
    }

    pub fn initial_state(&self, init: &InitialCondition) -> Vec<Complex64> {
        let c1 = coherent_amplitudes(init.eps1, self.cutoff1);
        let c2 = coherent_amplitudes(init.eps2, self.cutoff2);
        let mut psi = vec![ZERO; self.dim()];
        for (n1, &u) in c1.iter().enumerate() {
            for (n2, &v) in c2.iter().enumerate() {
                psi[self.index(init.level, n1, n2)] = u * v;
            }
        }
        normalize(&mut psi);
        psi
    }

    /// Maps a state of this stage at time `t` into the rotating frame.
    pub fn to_rotating_frame(&self, t: f64, psi: &[Complex64]) -> Vec<Complex64> {
        match self.stage.frame() {
            Frame::Rotating => psi.to_vec(),
            Frame::Interaction => psi
                .iter()
                .zip(&self.frame_diag)
                .map(|(&a, &w)| a * Complex64::from_polar(1.0, w * t))
                .collect(),
        }
    }

    /// Field amplitudes conditioned on atomic level `level`.
    pub fn level_block<'a>(&self, psi: &'a [Complex64], level: Level) -> &'a [Complex64] {
        let fd = self.field.dim();
        &psi[level as usize * fd..(level as usize + 1) * fd]
    }

    /// Population with either mode at its cutoff.
    pub fn boundary_population(&self, psi: &[Complex64]) -> f64 {
        let mut p = 0.0;
        for l in Level::ALL {
            for n1 in 0..=self.cutoff1 {
                for n2 in 0..=self.cutoff2 {
                    if n1 == self.cutoff1 || n2 == self.cutoff2 {
                        p += psi[self.index(l, n1, n2)].norm_sqr();
                    }
                }
            }
        }
        p
    }

    pub fn level_populations(&self, psi: &[Complex64]) -> [f64; 4] {
        Level::ALL.map(|l| self.level_block(psi, l).iter().map(|a| a.norm_sqr()).sum())
    }

    /// `⟨n1 − n2⟩`
    pub fn number_difference(&self, psi: &[Complex64]) -> f64 {
        let mut acc = 0.0;
        for l in Level::ALL {
            for n1 in 0..=self.cutoff1 {
                for n2 in 0..=self.cutoff2 {
                    acc += psi[self.index(l, n1, n2)].norm_sqr() * (n1 as f64 - n2 as f64);
                }
            }
        }
        acc
    }
}

fn coherent_amplitudes(eps: Complex64, cutoff: usize) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(cutoff + 1);
    let mut c = Complex64::new((-0.5 * eps.norm_sqr()).exp(), 0.0);
    for n in 0..=cutoff {
        if n > 0 {
            c = c * eps / (n as f64).sqrt();
        }
        out.push(c);
    }
    out
}

fn norm_sqr(psi: &[Complex64]) -> f64 {
    psi.iter().map(|a| a.norm_sqr()).sum()
}

fn normalize(psi: &mut [Complex64]) {
    let n = norm_sqr(psi).sqrt();
    if n > 0.0 {
        psi.iter_mut().for_each(|a| *a /= n);
    }
}

fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FockOptions {
    /// Step cap; defaults to `0.01 / max|Δk|`.
    pub max_step: Option<f64>,
    pub rtol: f64,
    pub atol: f64,
    pub leakage_threshold: f64,
    pub norm_tolerance: f64,
}

impl Default for FockOptions {
    fn default() -> Self {
        Self {
            max_step: None,
            rtol: 1e-11,
            atol: 1e-13,
            leakage_threshold: 1e-8,
            norm_tolerance: 1e-8,
        }
    }
}

#[derive(Clone, Debug)]
pub struct FockRun {
    pub stage: Stage,
    pub tau: f64,
    /// Final state in the stage's own frame.
    pub state: Vec<Complex64>,
    pub norm_drift: f64,
    pub boundary_population: f64,
    pub stats: DopriStats,
}

/// Integrates the Schrödinger equation of `model` from `initial` for time `tau`.
pub fn fock_evolve(
    model: &FockOperatorModel,
    initial: &InitialCondition,
    tau: f64,
    opts: &FockOptions,
) -> Result<FockRun> {
    let psi0 = model.initial_state(initial);
    let max_step = opts.max_step.unwrap_or(0.01 / model.max_detuning);
    let dopri = DopriOptions {
        rtol: opts.rtol,
        atol: opts.atol,
        max_step,
        ..Default::default()
    };
    let (state, stats) = integrate(|t, y, dy| model.apply(t, y, dy), 0.0, tau, &psi0, &dopri)?;

    let norm_drift = (norm_sqr(&state) - 1.0).abs();
    if norm_drift > opts.norm_tolerance {
        return Err(Error::Integration(format!(
            "norm drift {norm_drift:e} exceeds {:e} for stage {:?}",
            opts.norm_tolerance, model.stage
        )));
    }
    let boundary_population = model.boundary_population(&state);
    if boundary_population > opts.leakage_threshold {
        return Err(Error::CutoffLeakage {
            population: boundary_population,
            threshold: opts.leakage_threshold,
        });
    }
    Ok(FockRun {
        stage: model.stage,
        tau,
        state,
        norm_drift,
        boundary_population,
        stats,
    })
}

/// Overlap measures between two stage evolutions at the same time.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StageComparison {
    /// `|⟨ψA|ψB⟩|²` for equal atomic supports; otherwise the atom is traced
    /// out and this is `Tr(ρA ρB)` over the field, the Uhlmann fidelity
    /// whenever one reduced state is pure.
    pub fidelity: f64,
    pub traced: bool,
    /// `|⟨ψA|ψB⟩|²` on the full space, with each state as it stands.
    pub full_overlap: f64,
    /// Overlap of the normalized `|d⟩` blocks.
    pub conditional_d: f64,
}

pub fn compare_runs(
    model_a: &FockOperatorModel,
    run_a: &FockRun,
    model_b: &FockOperatorModel,
    run_b: &FockRun,
) -> StageComparison {
    assert_eq!(
        model_a.field, model_b.field,
        "comparison needs equal cutoffs"
    );
    assert!(
        (run_a.tau - run_b.tau).abs() <= 1e-12 * run_a.tau.max(1.0),
        "comparison needs equal times"
    );
    let psi_a = model_a.to_rotating_frame(run_a.tau, &run_a.state);
    let psi_b = model_b.to_rotating_frame(run_b.tau, &run_b.state);

    let full_overlap = inner(&psi_a, &psi_b).norm_sqr();
    let traced = model_a.stage.support() != model_b.stage.support();
    let fidelity = if traced {
        let mut acc = 0.0;
        for la in Level::ALL {
            for lb in Level::ALL {
                acc += inner(
                    model_a.level_block(&psi_a, la),
                    model_b.level_block(&psi_b, lb),
                )
                .norm_sqr();
            }
        }
        acc
    } else {
        full_overlap
    };
    let da = model_a.level_block(&psi_a, Level::D);
    let db = model_b.level_block(&psi_b, Level::D);
    let conditional_d = inner(da, db).norm_sqr() / (norm_sqr(da) * norm_sqr(db));
    StageComparison {
        fidelity,
        traced,
        full_overlap,
        conditional_d,
    }
}

/// Evolves two stages from the same initial state and compares them at `tau`.
#[derive(Clone, Debug)]
pub struct StagePair {
    pub comparison: StageComparison,
    pub first: FockRun,
    pub second: FockRun,
    pub first_populations: [f64; 4],
}

pub fn evolve_and_compare(
    params: &SystemParams,
    first: Stage,
    second: Stage,
    initial: &InitialCondition,
    tau: f64,
    cutoff: (usize, usize),
    opts: &FockOptions,
) -> Result<StagePair> {
    let ma = FockOperatorModel::new(params, first, cutoff.0, cutoff.1)?;
    let mb = FockOperatorModel::new(params, second, cutoff.0, cutoff.1)?;
    let ra = fock_evolve(&ma, initial, tau, opts)?;
    let rb = fock_evolve(&mb, initial, tau, opts)?;
    let comparison = compare_runs(&ma, &ra, &mb, &rb);
    let first_populations = ma.level_populations(&ra.state);
    Ok(StagePair {
        comparison,
        first: ra,
        second: rb,
        first_populations,
    })
}
