//! Text and JSON formats for shapes, diagrams, symmetric functions and step
//! logs.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use strandtrace_core::diagrams::{PartialCombo, StrandDiagram};
use strandtrace_core::orders::StaircaseShape;
use strandtrace_core::{Basis, Partition, SymFun};

use crate::CliError;

/// Coefficients are always written as `numerator/denominator`.
pub fn coeff_string(c: &BigRational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub fn parse_coeff(s: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::Input(format!("not a rational number: {s:?}"));
    let int = |t: &str| t.trim().parse::<BigInt>().map_err(|_| bad());
    match s.split_once('/') {
        Some((n, d)) => {
            let d = int(d)?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(int(n)?, d))
        }
        None => Ok(BigRational::from_integer(int(s)?)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: Vec<usize>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFunJson {
    pub basis: String,
    pub terms: Vec<TermJson>,
}

pub fn terms_json(f: &SymFun) -> Vec<TermJson> {
    f.terms()
        .map(|(l, c)| TermJson {
            partition: l.parts().to_vec(),
            coeff: coeff_string(c),
        })
        .collect()
}

impl From<&SymFun> for SymFunJson {
    fn from(f: &SymFun) -> Self {
        SymFunJson {
            basis: f.basis().tag().to_string(),
            terms: terms_json(f),
        }
    }
}

impl TryFrom<&SymFunJson> for SymFun {
    type Error = CliError;

    fn try_from(j: &SymFunJson) -> Result<Self, CliError> {
        let basis = Basis::from_tag(&j.basis)
            .ok_or_else(|| CliError::Input(format!("unknown basis {:?}", j.basis)))?;
        let terms = j
            .terms
            .iter()
            .map(|t| Ok((Partition::new(t.partition.clone())?, parse_coeff(&t.coeff)?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(SymFun::from_terms(basis, terms))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub n: usize,
    pub crossings: Vec<[usize; 2]>,
}

impl From<&StrandDiagram> for DiagramJson {
    fn from(d: &StrandDiagram) -> Self {
        DiagramJson {
            n: d.strands(),
            crossings: d.crossings().iter().map(|c| [c.i(), c.j()]).collect(),
        }
    }
}

impl TryFrom<&DiagramJson> for StrandDiagram {
    type Error = CliError;

    fn try_from(j: &DiagramJson) -> Result<Self, CliError> {
        let pairs: Vec<(usize, usize)> = j.crossings.iter().map(|c| (c[0], c[1])).collect();
        Ok(StrandDiagram::from_pairs(j.n, &pairs)?)
    }
}

/// Parses `n=4; [2,3] [1,2] [3,4] [2,3]`.
pub fn parse_diagram(text: &str) -> Result<StrandDiagram, CliError> {
    let bad = || CliError::Input(format!("not a diagram: {text:?}"));
    let (head, body) = text.split_once(';').unwrap_or((text, ""));
    let n: usize = head
        .trim()
        .strip_prefix("n=")
        .ok_or_else(bad)?
        .trim()
        .parse()
        .map_err(|_| bad())?;
    let mut pairs = Vec::new();
    for token in body.split_whitespace() {
        let inner = token
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(bad)?;
        let (i, j) = inner.split_once(',').ok_or_else(bad)?;
        pairs.push((
            i.trim().parse().map_err(|_| bad())?,
            j.trim().parse().map_err(|_| bad())?,
        ));
    }
    Ok(StrandDiagram::from_pairs(n, &pairs)?)
}

/// Parses a comma-separated partition such as `4,3,1,1`; the empty string is
/// the empty partition.
pub fn parse_shape(lambda: &str, n: usize) -> Result<StaircaseShape, CliError> {
    let parts = lambda
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| CliError::Input(format!("bad part {t:?} in {lambda:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(StaircaseShape::new(n, Partition::new(parts)?)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepTermJson {
    pub n: usize,
    pub crossings: Vec<[usize; 2]>,
    pub b: usize,
    pub coeff: Vec<TermJson>,
}

/// One line of a step log: `Σ coeff · ∂_b D` with coefficients in the h
/// basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub step: usize,
    pub terms: Vec<StepTermJson>,
}

pub fn step_json(step: usize, combo: &PartialCombo) -> StepJson {
    StepJson {
        step,
        terms: combo
            .terms()
            .map(|((d, b), c)| {
                let d = DiagramJson::from(d);
                StepTermJson {
                    n: d.n,
                    crossings: d.crossings,
                    b: *b,
                    coeff: terms_json(c),
                }
            })
            .collect(),
    }
}

/// One line of the search log.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLine {
    pub n: usize,
    pub crossings: Vec<[usize; 2]>,
    pub h: Vec<TermJson>,
    pub positive: bool,
}
