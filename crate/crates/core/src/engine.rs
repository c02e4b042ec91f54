//! Driving two points of ℕⁿ to comparability.
//!
//! Each round the strategy proposes a set `J` from the current pair alone
//! ([`choose_set`]), an [`Adversary`] picks any `j ∈ J`, and both points are
//! replaced by their images under `A_{J,j}`. Whatever `j` is picked, the
//! measure [`Tau`] drops strictly in the lexicographic order on ℕ×ℕ, so the
//! loop terminates against every adversary.

use num_bigint::BigUint;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{check_dim, Error, Result};
use crate::tau::{comparability, reduce_pair, tau, Comparability, Tau};
use crate::transform::{Step, Trace};
use crate::vector::NatVec;

/// What an adversary gets to see before picking `j`.
#[derive(Debug, Clone, Copy)]
pub struct Position<'a> {
    /// Every vector currently being transformed.
    pub vectors: &'a [NatVec],
    /// Index of the current champion, in game play.
    pub champion: Option<usize>,
    /// The proposed `J`, sorted ascending.
    pub set: &'a [usize],
    /// Number of rounds already played.
    pub round: usize,
}

/// Returned by an adversary that gives up, such as a terminal reaching EOF.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Abort;

/// The player who picks `j ∈ J`.
pub trait Adversary {
    fn choose(&mut self, position: &Position<'_>) -> Result<usize, Abort>;
}

impl<A: Adversary + ?Sized> Adversary for &mut A {
    fn choose(&mut self, position: &Position<'_>) -> Result<usize, Abort> {
        (**self).choose(position)
    }
}

impl<A: Adversary + ?Sized> Adversary for Box<A> {
    fn choose(&mut self, position: &Position<'_>) -> Result<usize, Abort> {
        (**self).choose(position)
    }
}

/// The built-in, non-interactive adversaries.
///
/// Interactive play is any other [`Adversary`] implementation; the CLI
/// provides one that prompts on the terminal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AdversaryPolicy {
    /// Always the smallest index of `J`.
    FirstIndex,
    /// Uniform over `J`, reproducible from the seed.
    Random { seed: u64 },
    /// The `j` that makes the tracked vectors grow the most; ties go to the
    /// smallest index.
    MaxGrowth,
    /// Plays the listed (0-based) indices in order, then falls back to the
    /// smallest index once the script runs out.
    Scripted(Vec<usize>),
}

impl AdversaryPolicy {
    pub fn build(&self) -> Box<dyn Adversary + Send> {
        match self {
            AdversaryPolicy::FirstIndex => Box::new(FirstIndex),
            AdversaryPolicy::Random { seed } => Box::new(SeededRandom::new(*seed)),
            AdversaryPolicy::MaxGrowth => Box::new(MaxGrowth),
            AdversaryPolicy::Scripted(choices) => Box::new(Scripted::new(choices.clone())),
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct FirstIndex;

impl Adversary for FirstIndex {
    fn choose(&mut self, position: &Position<'_>) -> Result<usize, Abort> {
        Ok(position.set[0])
    }
}

#[derive(Debug, Clone)]
pub struct SeededRandom {
    rng: ChaCha8Rng,
}

impl SeededRandom {
    pub fn new(seed: u64) -> Self {
        SeededRandom {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl Adversary for SeededRandom {
    fn choose(&mut self, position: &Position<'_>) -> Result<usize, Abort> {
        Ok(position.set[self.rng.random_range(0..position.set.len())])
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct MaxGrowth;

impl Adversary for MaxGrowth {
    fn choose(&mut self, position: &Position<'_>) -> Result<usize, Abort> {
        // After the step the total is Σ_v (|v| − v_j + Σ_{i∈J} v_i), so only
        // the −Σ_v v_j term depends on j.
        let mut best = position.set[0];
        let mut best_total: Option<BigUint> = None;
        for &j in position.set {
            let total: BigUint = position
                .vectors
                .iter()
                .map(|v| {
                    let sum: BigUint = position.set.iter().map(|&i| &v[i]).sum();
                    v.norm() - &v[j] + sum
                })
                .sum();
            if best_total.as_ref().is_none_or(|b| total > *b) {
                best = j;
                best_total = Some(total);
            }
        }
        Ok(best)
    }
}

#[derive(Debug, Clone)]
pub struct Scripted {
    choices: Vec<usize>,
    next: usize,
}

impl Scripted {
    pub fn new(choices: Vec<usize>) -> Self {
        Scripted { choices, next: 0 }
    }
}

impl Adversary for Scripted {
    fn choose(&mut self, position: &Position<'_>) -> Result<usize, Abort> {
        let j = self.choices.get(self.next).copied().unwrap_or(position.set[0]);
        self.next += 1;
        Ok(j)
    }
}

/// Everything recorded while driving a pair to comparability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineTrace {
    pub steps: Trace,
    /// `τ` before each step, then the final value.
    pub tau_history: Vec<Tau>,
    pub outcome: Comparability,
    /// Whether the proposal swapped the roles of the two points, per step.
    pub swapped: Vec<bool>,
    pub final_alpha: NatVec,
    pub final_beta: NatVec,
}

/// The proposal for an incomparable pair.
///
/// With `|ᾱ| ≤ |β̄|` (roles swapped otherwise), `J` is the support of `ᾱ`
/// together with the shortest run of the largest entries of `β̄` whose sum
/// reaches `|ᾱ|`. Ties among equal entries of `β̄` go to the smaller index.
pub fn choose_set(alpha: &NatVec, beta: &NatVec) -> Result<Vec<usize>> {
    choose_set_with_swap(alpha, beta).map(|(set, _)| set)
}

/// [`choose_set`], also reporting whether the roles were swapped.
pub fn choose_set_with_swap(alpha: &NatVec, beta: &NatVec) -> Result<(Vec<usize>, bool)> {
    let r = reduce_pair(alpha, beta)?;
    let (na, nb) = (r.abar_norm(), r.bbar_norm());
    if na.is_zero() || nb.is_zero() {
        return Err(Error::AlreadyComparable);
    }
    let swapped = na > nb;
    let (small, large, target) = if swapped {
        (&r.bbar, &r.abar, nb)
    } else {
        (&r.abar, &r.bbar, na)
    };

    let mut set: Vec<usize> = (0..small.dim()).filter(|&i| !small[i].is_zero()).collect();
    let mut order: Vec<usize> = (0..large.dim()).filter(|&i| !large[i].is_zero()).collect();
    // stable: equal entries keep ascending index order
    order.sort_by(|&x, &y| large[y].cmp(&large[x]));

    let mut partial = BigUint::zero();
    for i in order {
        partial += &large[i];
        set.push(i);
        if partial >= target {
            break;
        }
    }
    set.sort_unstable();
    Ok((set, swapped))
}

/// Drive `(α, β)` to comparability against `adversary`.
///
/// `step_limit` bounds the number of rounds; `None` means unlimited.
pub fn run_pair<A: Adversary + ?Sized>(
    alpha: &NatVec,
    beta: &NatVec,
    adversary: &mut A,
    step_limit: Option<usize>,
) -> Result<EngineTrace> {
    check_dim(alpha.dim(), beta.dim())?;
    let n = alpha.dim();
    let mut pair = [alpha.clone(), beta.clone()];
    let mut steps = Trace::new();
    let mut tau_history = vec![tau(&pair[0], &pair[1])?];
    let mut swapped = Vec::new();

    loop {
        let current = tau_history.last().expect("history is never empty");
        if current.is_comparable() {
            break;
        }
        if step_limit.is_some_and(|limit| steps.len() >= limit) {
            return Err(Error::StepLimitExceeded {
                limit: step_limit.unwrap_or_default(),
                partial: steps,
            });
        }
        let (set, swap) = choose_set_with_swap(&pair[0], &pair[1])?;
        let position = Position {
            vectors: &pair,
            champion: None,
            set: &set,
            round: steps.len(),
        };
        let j = adversary
            .choose(&position)
            .map_err(|Abort| Error::Aborted { partial: steps.clone() })?;
        let step = checked_step(n, set, j)?;
        for v in &mut pair {
            step.apply_in_place(v);
        }
        let next = tau(&pair[0], &pair[1])?;
        if next >= *current {
            return Err(Error::Consistency(format!(
                "τ did not decrease: {current} -> {next} after {step}"
            )));
        }
        steps.push(step);
        swapped.push(swap);
        tau_history.push(next);
    }

    let outcome = comparability(&pair[0], &pair[1])?;
    let [final_alpha, final_beta] = pair;
    Ok(EngineTrace {
        steps,
        tau_history,
        outcome,
        swapped,
        final_alpha,
        final_beta,
    })
}

pub(crate) fn checked_step(dim: usize, set: Vec<usize>, choice: usize) -> Result<Step> {
    if set.binary_search(&choice).is_err() {
        return Err(Error::InvalidChoice { choice, allowed: set });
    }
    Step::new(dim, set, choice)
}
