use perron_core::{
    apply_substitution, comparability, compose_trace, monomialize, positivize_all, run_pair,
    solve, Adversary, AdversaryPolicy, Comparability, Error as CoreError,
    GroupBasis, GroupElement, GroupOrder, IntVec, LexVector, NatVec, Polynomial, Trace,
    ValuedRing,
};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::json::*;

pub const DEFAULT_STEP_LIMIT: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Compare,
    GameSolve,
    GamePlay,
    Positivize,
    Monomialize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub trace: bool,
    pub seed: Option<u64>,
    pub step_limit: Option<usize>,
}

impl Default for Options {
    fn default() -> Self {
        Options { trace: false, seed: None, step_limit: Some(DEFAULT_STEP_LIMIT) }
    }
}

pub mod exit {
    pub const OK: i32 = 0;
    pub const MALFORMED: i32 = 1;
    pub const INVALID: i32 = 2;
    pub const STEP_LIMIT: i32 = 3;
    pub const ABORTED: i32 = 4;
}

#[derive(Debug, Error)]
pub enum Failure {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Malformed(_) => exit::MALFORMED,
            Failure::Invalid(_) => exit::INVALID,
            Failure::Core(CoreError::StepLimitExceeded { .. }) => exit::STEP_LIMIT,
            Failure::Core(CoreError::Aborted { .. }) => exit::ABORTED,
            Failure::Core(_) => exit::INVALID,
        }
    }

    fn diagnostics(&self) -> Vec<String> {
        let mut out = vec![self.to_string()];
        if let Failure::Core(CoreError::InvalidOrder(violations)) = self {
            out.extend(violations.iter().map(|v| v.to_string()));
        }
        out
    }
}

pub struct Outcome {
    pub document: ResultDocument,
    pub exit_code: i32,
}

struct Success {
    payload: Value,
    trace: Trace,
}

/// Runs one job. `interactive` is the adversary used for `"interactive"`
/// descriptors and for `game play`.
pub fn execute(
    command: Command,
    options: &Options,
    input: &str,
    interactive: Option<&mut dyn Adversary>,
) -> Outcome {
    let result = match command {
        Command::Compare => compare(options, input, interactive),
        Command::GameSolve => game(options, input, false, interactive),
        Command::GamePlay => game(options, input, true, interactive),
        Command::Positivize => positivize(input),
        Command::Monomialize => monomialize_cmd(input),
    };
    match result {
        Ok(Success { payload, trace }) => Outcome {
            document: ResultDocument {
                schema_version: SCHEMA_VERSION,
                status: Status::Ok,
                payload,
                trace: options.trace.then(|| trace_entries(&trace)),
                diagnostics: vec![],
            },
            exit_code: exit::OK,
        },
        Err(failure) => {
            let partial = match &failure {
                Failure::Core(e) => e.partial_trace().map(trace_entries),
                _ => None,
            };
            Outcome {
                document: ResultDocument {
                    schema_version: SCHEMA_VERSION,
                    status: Status::Error,
                    payload: Value::Null,
                    trace: partial,
                    diagnostics: failure.diagnostics(),
                },
                exit_code: failure.exit_code(),
            }
        }
    }
}

fn parse<T: DeserializeOwned>(input: &str) -> Result<T, Failure> {
    serde_json::from_str(input).map_err(|e| Failure::Malformed(e.to_string()))
}

fn check_schema(version: Option<u32>) -> Result<(), Failure> {
    match version {
        None | Some(SCHEMA_VERSION) => Ok(()),
        Some(v) => Err(Failure::Invalid(format!("unsupported schema_version {v}"))),
    }
}

fn to_value<T: Serialize>(payload: &T) -> Value {
    serde_json::to_value(payload).expect("payloads always serialize")
}

fn natvec(v: &[Nat]) -> Result<NatVec, Failure> {
    Ok(NatVec::new(to_natvec(v))?)
}

fn resolve_adversary<'a>(
    descriptor: Option<AdversaryDescriptor>,
    options: &Options,
    interactive_allowed: bool,
    interactive: Option<&'a mut dyn Adversary>,
) -> Result<Box<dyn Adversary + 'a>, Failure> {
    let descriptor = match (descriptor, options.seed) {
        (Some(s), _) => s,
        (None, Some(_)) => AdversaryDescriptor { kind: AdversaryKind::Random, ..Default::default() },
        (None, None) => AdversaryDescriptor::default(),
    };
    let policy = match descriptor.kind {
        AdversaryKind::First => AdversaryPolicy::FirstIndex,
        AdversaryKind::MaxGrowth => AdversaryPolicy::MaxGrowth,
        AdversaryKind::Random => AdversaryPolicy::Random {
            seed: options.seed.or(descriptor.seed).unwrap_or(0),
        },
        AdversaryKind::Scripted => {
            let choices = descriptor
                .choices
                .ok_or_else(|| Failure::Invalid("scripted adversary requires \"choices\"".into()))?;
            if choices.contains(&0) {
                return Err(Failure::Invalid("choices are 1-based".into()));
            }
            AdversaryPolicy::Scripted(choices.into_iter().map(|c| c - 1).collect())
        }
        AdversaryKind::Interactive => {
            if !interactive_allowed {
                return Err(Failure::Invalid(
                    "interactive adversary is only available for compare and game play".into(),
                ));
            }
            let prompt = interactive
                .ok_or_else(|| Failure::Invalid("interactive adversary needs a terminal".into()))?;
            return Ok(Box::new(prompt));
        }
    };
    Ok(policy.build())
}

fn compare(
    options: &Options,
    input: &str,
    interactive: Option<&mut dyn Adversary>,
) -> Result<Success, Failure> {
    let job: CompareInput = parse(input)?;
    check_schema(job.schema_version)?;
    let alpha = natvec(&job.alpha)?;
    let beta = natvec(&job.beta)?;
    if alpha.dim() != beta.dim() {
        return Err(CoreError::DimensionMismatch { expected: alpha.dim(), found: beta.dim() }.into());
    }
    let mut adversary = resolve_adversary(job.adversary, options, true, interactive)?;
    let run = run_pair(&alpha, &beta, &mut adversary, options.step_limit)?;
    let relation = match run.outcome {
        Comparability::LessEq => Relation::Le,
        Comparability::GreaterEq => Relation::Ge,
        Comparability::Equal => Relation::Eq,
        Comparability::Incomparable => {
            return Err(CoreError::Consistency("run ended incomparable".into()).into())
        }
    };
    let matrix = compose_trace(&run.steps, alpha.dim())?;
    let payload = ComparePayload {
        relation,
        final_alpha: nats(&run.final_alpha),
        final_beta: nats(&run.final_beta),
        matrix: matrix.rows().iter().map(|r| r.iter().cloned().map(Nat).collect()).collect(),
        rounds: run.steps.len(),
    };
    Ok(Success { payload: to_value(&payload), trace: run.steps })
}

fn game(
    options: &Options,
    input: &str,
    play: bool,
    interactive: Option<&mut dyn Adversary>,
) -> Result<Success, Failure> {
    let job: GameInput = parse(input)?;
    check_schema(job.schema_version)?;
    let vectors = job.vectors.iter().map(|v| natvec(v)).collect::<Result<Vec<_>, _>>()?;
    let descriptor = if play {
        Some(AdversaryDescriptor { kind: AdversaryKind::Interactive, ..Default::default() })
    } else {
        job.adversary
    };
    if vectors.is_empty() {
        return Err(CoreError::EmptyInput.into());
    }
    let mut adversary = resolve_adversary(descriptor, options, play, interactive)?;
    let out = solve(vectors, &mut adversary, options.step_limit)?;
    let payload = GamePayload {
        winner_index: out.winner_index,
        final_vectors: out.final_vectors.iter().map(nats).collect(),
        rounds: out.rounds,
    };
    Ok(Success { payload: to_value(&payload), trace: out.trace })
}

fn lex(row: &[Rational]) -> LexVector {
    LexVector::new(row.iter().map(|r| r.0.clone()).collect())
}

fn rationals(v: &LexVector) -> Vec<Rational> {
    v.coords().iter().cloned().map(Rational).collect()
}

fn positivize(input: &str) -> Result<Success, Failure> {
    let job: PositivizeInput = parse(input)?;
    check_schema(job.schema_version)?;
    let order = GroupOrder::new(job.generator_images.iter().map(|r| lex(r)).collect())?;
    let basis = GroupBasis::standard(&order);
    let elements = job
        .elements
        .iter()
        .map(|e| {
            let coords = IntVec::new(e.iter().map(|x| x.0.clone()).collect())?;
            if coords.dim() != order.rank() {
                return Err(CoreError::DimensionMismatch { expected: order.rank(), found: coords.dim() });
            }
            Ok(GroupElement::new(coords))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let out = positivize_all(&basis, &elements)?;
    let payload = PositivizePayload {
        basis_in_original: out
            .basis
            .coords_in_original()
            .iter()
            .map(|r| r.iter().cloned().map(Int).collect())
            .collect(),
        basis_images: out.basis.images().iter().map(rationals).collect(),
        coords: out.coords.iter().map(nats).collect(),
    };
    Ok(Success { payload: to_value(&payload), trace: out.trace })
}

fn monomialize_cmd(input: &str) -> Result<Success, Failure> {
    let job: MonomializeInput = parse(input)?;
    check_schema(job.schema_version)?;
    if job.values.len() != job.num_vars {
        return Err(Failure::Invalid(format!(
            "dimension mismatch: {} variables but {} values",
            job.num_vars,
            job.values.len()
        )));
    }
    let ring = ValuedRing::new(job.num_toric, job.values.iter().map(|r| lex(r)).collect())?;
    let terms = job
        .polynomial
        .iter()
        .map(|t| Ok::<_, Failure>((natvec(&t.exponents)?, t.coeff.0.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    let f = Polynomial::from_terms(job.num_vars, terms)?;
    let out = monomialize(&ring, &f)?;

    // Re-check the factorization before anything is emitted.
    let image = apply_substitution(&f, &out.substitution)?;
    if out.factor()?.mul(&out.unit)? != image {
        return Err(CoreError::Consistency("factorization check failed".into()).into());
    }
    let payload = MonomializePayload {
        substitution: out
            .substitution
            .matrix()
            .rows()
            .iter()
            .map(|r| r.iter().cloned().map(Nat).collect())
            .collect(),
        new_values: out.ring.values().iter().map(rationals).collect(),
        factor_exponents: nats(&out.factor_exponents),
        unit: out
            .unit
            .terms()
            .map(|(e, c)| Term { coeff: Rational(c.clone()), exponents: nats(e) })
            .collect(),
    };
    Ok(Success { payload: to_value(&payload), trace: out.trace })
}

/// Whether `a` and `b` compare as `relation` says.
pub fn relation_holds(relation: &Relation, a: &NatVec, b: &NatVec) -> bool {
    matches!(
        (relation, comparability(a, b)),
        (Relation::Le, Ok(Comparability::LessEq))
            | (Relation::Ge, Ok(Comparability::GreaterEq))
            | (Relation::Eq, Ok(Comparability::Equal))
    )
}

