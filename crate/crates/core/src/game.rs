//! Hironaka's polyhedra game.
//!
//! Player 1 proposes `J`, player 2 answers with `j ∈ J`, and every point of
//! `V` is replaced by its image under `A_{J,j}`. Player 1 wins once `V` has a
//! componentwise minimum, which is the same as the positive hull of `V`
//! being an orthant.
//!
//! The strategy here keeps a champion and sweeps `V` in input order. Each
//! incomparable (champion, challenger) pair is played out with the pairwise
//! proposal of [`choose_set`]; steps preserve `≤`, so pairs settled earlier
//! stay settled.

use crate::engine::{checked_step, choose_set, Abort, Adversary, Position};
use crate::error::{check_dim, Error, Result};
use crate::tau::{comparability, Comparability};
use crate::transform::Trace;
use crate::vector::NatVec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameState {
    vectors: Vec<NatVec>,
    round: usize,
    trace: Trace,
    champion: usize,
    // next index the champion has to be compared against
    cursor: usize,
}

impl GameState {
    pub fn new(vectors: Vec<NatVec>) -> Result<Self> {
        let first = vectors.first().ok_or(Error::EmptyInput)?;
        let dim = first.dim();
        for v in &vectors {
            check_dim(dim, v.dim())?;
        }
        Ok(GameState {
            vectors,
            round: 0,
            trace: Trace::new(),
            champion: 0,
            cursor: 1,
        })
    }

    pub fn vectors(&self) -> &[NatVec] {
        &self.vectors
    }

    pub fn dim(&self) -> usize {
        self.vectors[0].dim()
    }

    pub fn round(&self) -> usize {
        self.round
    }

    pub fn trace(&self) -> &Trace {
        &self.trace
    }

    pub fn champion(&self) -> usize {
        self.champion
    }

    /// Play one round with `J = set` and the chosen `j`.
    pub fn apply_round(&self, set: &[usize], choice: usize) -> Result<GameState> {
        let step = checked_step(self.dim(), set.to_vec(), choice)?;
        let mut next = self.clone();
        for v in &mut next.vectors {
            step.apply_in_place(v);
        }
        next.trace.push(step);
        next.round += 1;
        Ok(next)
    }

    /// Player 1's move.
    ///
    /// Advances the champion past every vector it is already comparable
    /// with, then proposes `J` for the first incomparable one.
    pub fn propose_set(&mut self) -> Result<Vec<usize>> {
        if is_won(&self.vectors)?.is_some() {
            return Err(Error::AlreadyWon);
        }
        while self.cursor < self.vectors.len() {
            let (c, w) = (&self.vectors[self.champion], &self.vectors[self.cursor]);
            match comparability(c, w)? {
                Comparability::Incomparable => return choose_set(c, w),
                Comparability::GreaterEq => self.champion = self.cursor,
                Comparability::LessEq | Comparability::Equal => {}
            }
            self.cursor += 1;
        }
        Err(Error::Consistency(
            "champion is below every vector but the game is not won".into(),
        ))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameOutcome {
    pub final_vectors: Vec<NatVec>,
    pub winner_index: usize,
    pub trace: Trace,
    pub rounds: usize,
}

/// Index of a componentwise minimum of `V`, the smallest such index when
/// several vectors are equal.
pub fn is_won(vectors: &[NatVec]) -> Result<Option<usize>> {
    let first = vectors.first().ok_or(Error::EmptyInput)?;
    let mut lower = first.entries().to_vec();
    for v in &vectors[1..] {
        check_dim(first.dim(), v.dim())?;
        for (m, x) in lower.iter_mut().zip(v.entries()) {
            if x < m {
                *m = x.clone();
            }
        }
    }
    Ok(vectors.iter().position(|v| v.entries() == lower.as_slice()))
}

/// Play the game to a win against `adversary`.
pub fn solve<A: Adversary + ?Sized>(
    vectors: Vec<NatVec>,
    adversary: &mut A,
    step_limit: Option<usize>,
) -> Result<GameOutcome> {
    let mut state = GameState::new(vectors)?;
    loop {
        if let Some(winner_index) = is_won(&state.vectors)? {
            return Ok(GameOutcome {
                rounds: state.round,
                winner_index,
                trace: state.trace,
                final_vectors: state.vectors,
            });
        }
        if let Some(limit) = step_limit.filter(|&l| state.round >= l) {
            return Err(Error::StepLimitExceeded {
                limit,
                partial: state.trace,
            });
        }
        let set = state.propose_set()?;
        let position = Position {
            vectors: &state.vectors,
            champion: Some(state.champion),
            set: &set,
            round: state.round,
        };
        let choice = adversary.choose(&position).map_err(|Abort| Error::Aborted {
            partial: state.trace.clone(),
        })?;
        state = state.apply_round(&set, choice)?;
    }
}

/// The componentwise-minimal elements of `V`, without duplicates, in input
/// order. The positive hull is unchanged.
pub fn prune_dominated(vectors: &[NatVec]) -> Vec<NatVec> {
    let mut out: Vec<NatVec> = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        let dominated = vectors
            .iter()
            .enumerate()
            .any(|(k, u)| k != i && u != v && u.le(v).unwrap_or(false));
        if !dominated && !out.contains(v) {
            out.push(v.clone());
        }
    }
    out
}
