//! Exact polynomial algebra, exterior forms, and Nambu/Poisson brackets with their
//! Casimir and invariance checks on C^6, C^5, C^3 and C^12.

pub mod bracket;
pub mod c12;
pub mod c5;
pub mod c6;
pub mod dubrovin;
pub mod fi;
pub mod form;
pub mod linalg;
pub mod map;
mod parse;
pub mod poly;
pub mod report;
pub mod sample;
pub mod solver;

pub use bracket::{bracket_from_form, det, fundamental_identity, nambu_canonical, subordinate, BracketTable};
pub use form::DiffForm;
pub use map::PolyMap;
pub use poly::{q, qf, MultiPoly, Vars, Q};
pub use report::Check;

#[derive(Debug, thiserror::Error)]
pub enum PoissonError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("map {0} is not a triangular automorphism")]
    NotInvertible(String),
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("unknown space {0}")]
    UnknownSpace(String),
}

/// Spaces with a verification suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    C6,
    C5,
    C3,
    C12,
}

impl std::str::FromStr for Space {
    type Err = PoissonError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "c6" => Ok(Space::C6),
            "c5" => Ok(Space::C5),
            "c3" | "dubrovin" => Ok(Space::C3),
            "c12" => Ok(Space::C12),
            _ => Err(PoissonError::UnknownSpace(s.to_string())),
        }
    }
}

impl Space {
    pub fn name(self) -> &'static str {
        match self {
            Space::C6 => "c6",
            Space::C5 => "c5",
            Space::C3 => "c3",
            Space::C12 => "c12",
        }
    }
}

/// A stored generator of the group acting on a space, by name (`tau1`, `sigma2`, `lambda_01`, `nu`, ...).
pub fn generator(space: Space, name: &str) -> Result<PolyMap, PoissonError> {
    let maps: Vec<PolyMap> = match space {
        Space::C6 => {
            let v = c6::vars();
            let mut g = c6::generators(&v);
            g.push(c6::nu(&v));
            g
        }
        Space::C5 => c5::all_maps(&c5::vars()),
        Space::C3 => {
            let v = dubrovin::vars();
            vec![dubrovin::tau1(&v), dubrovin::tau2(&v)]
        }
        Space::C12 => {
            let v = c12::vars();
            let mut g: Vec<PolyMap> = (1..=3).map(|i| c12::tau(&v, i)).collect();
            g.push(c12::nu(&v));
            g
        }
    };
    maps.into_iter().find(|m| m.name() == name).ok_or_else(|| PoissonError::UnknownGenerator(name.to_string()))
}

/// `{f, h}^g := g*{f o g^-1, h o g^-1}` for a named generator.
pub fn transform_bracket(space: Space, name: &str, table: &BracketTable) -> Result<BracketTable, PoissonError> {
    let phi = generator(space, name)?;
    let psi = phi.inverse(table.dim())?;
    Ok(table.transform(&phi, &psi))
}

/// Invariance, Casimir and structure checks for one space (solver runs excluded).
pub fn check_space(space: Space) -> Vec<Check> {
    match space {
        Space::C6 => c6::checks(),
        Space::C5 => c5::checks(),
        Space::C3 => dubrovin::checks(),
        Space::C12 => c12::checks(),
    }
}

/// Solver-based checks (quadratic Casimir systems and log-canonical closure).
pub fn solver_checks(space: Space) -> Result<Vec<Check>, PoissonError> {
    match space {
        Space::C6 => Ok(c6::solver_checks()),
        Space::C12 => Ok(c12::solver_checks()),
        other => Err(PoissonError::UnknownSpace(format!("{} has no quadratic solver", other.name()))),
    }
}
