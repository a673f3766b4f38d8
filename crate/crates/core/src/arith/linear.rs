use alloc::vec::Vec;
use core::fmt;

use super::Permutation;
use crate::Error;

/// A variable of the ambient alphabet: a parameter `q_s` (1-based) or the
/// indeterminate `x`. Parameters rank by index and `x` ranks after them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variable {
    Param(usize),
    X,
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::Param(s) => write!(f, "q{s}"),
            Variable::X => f.write_str("x"),
        }
    }
}

/// A canonical linear form `c + pos − neg` with at least one variable.
///
/// If both variables are present, `pos` ranks below `neg`; a form with one
/// variable keeps it in `pos`. Any reorientation needed to reach this shape
/// is reported to the caller as a sign, see [`Linear`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearForm {
    pos: Variable,
    neg: Option<Variable>,
    c: i64,
}

/// Result of normalizing an arbitrary `c + a − b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Linear {
    Constant(i64),
    /// `negated` means the input equals `−form`.
    Form {
        negated: bool,
        form: LinearForm,
    },
}

impl LinearForm {
    /// Normalizes `c + pos − neg`, with absent variables contributing 0.
    pub fn normalize(c: i64, pos: Option<Variable>, neg: Option<Variable>) -> Linear {
        match (pos, neg) {
            (None, None) => Linear::Constant(c),
            (Some(a), Some(b)) if a == b => Linear::Constant(c),
            (Some(a), None) => Linear::Form {
                negated: false,
                form: LinearForm {
                    pos: a,
                    neg: None,
                    c,
                },
            },
            (None, Some(b)) => Linear::Form {
                negated: true,
                form: LinearForm {
                    pos: b,
                    neg: None,
                    c: -c,
                },
            },
            (Some(a), Some(b)) if a < b => Linear::Form {
                negated: false,
                form: LinearForm {
                    pos: a,
                    neg: Some(b),
                    c,
                },
            },
            (Some(a), Some(b)) => Linear::Form {
                negated: true,
                form: LinearForm {
                    pos: b,
                    neg: Some(a),
                    c: -c,
                },
            },
        }
    }

    /// Normalizes `c + Σ coeff·v`. The variable part must reduce to
    /// `v`, `−v` or `v − w`.
    pub(crate) fn from_terms(c: i64, terms: &[(Variable, i64)]) -> Result<Linear, Error> {
        let mut collected: Vec<(Variable, i64)> = Vec::new();
        for &(v, k) in terms {
            match collected.iter_mut().find(|(w, _)| *w == v) {
                Some(entry) => entry.1 += k,
                None => collected.push((v, k)),
            }
        }
        collected.retain(|&(_, k)| k != 0);
        let mut pos = None;
        let mut neg = None;
        for (v, k) in collected {
            match k {
                1 if pos.is_none() => pos = Some(v),
                -1 if neg.is_none() => neg = Some(v),
                _ if k.abs() == 1 => return Err(Error::NotNegatable),
                _ => return Err(Error::ThreeVariableForm),
            }
        }
        Ok(LinearForm::normalize(c, pos, neg))
    }

    pub fn constant(&self) -> i64 {
        self.c
    }

    pub fn pos(&self) -> Variable {
        self.pos
    }

    pub fn neg(&self) -> Option<Variable> {
        self.neg
    }

    pub fn contains(&self, v: Variable) -> bool {
        self.pos == v || self.neg == Some(v)
    }

    pub(crate) fn terms(&self) -> Vec<(Variable, i64)> {
        let mut t = alloc::vec![(self.pos, 1)];
        if let Some(b) = self.neg {
            t.push((b, -1));
        }
        t
    }

    /// Replaces `x` by `q_s − q_t`.
    pub fn substitute_x(&self, s: usize, t: usize) -> Result<Linear, Error> {
        let mut terms = Vec::new();
        for (v, k) in self.terms() {
            if v == Variable::X {
                terms.push((Variable::Param(s), k));
                terms.push((Variable::Param(t), -k));
            } else {
                terms.push((v, k));
            }
        }
        let out = LinearForm::from_terms(self.c, &terms);
        if out == Err(Error::NotNegatable) {
            return Err(Error::ThreeVariableForm);
        }
        out
    }

    /// Replaces `x` by `−x`.
    pub fn negate_x(&self) -> Result<Linear, Error> {
        let terms: Vec<_> = self
            .terms()
            .into_iter()
            .map(|(v, k)| if v == Variable::X { (v, -k) } else { (v, k) })
            .collect();
        LinearForm::from_terms(self.c, &terms)
    }

    /// Replaces each `q_s` by `q_{σ(s)}`.
    pub fn permute(&self, sigma: &Permutation) -> Linear {
        let map = |v: Variable| match v {
            Variable::Param(s) if s <= sigma.degree() => Variable::Param(sigma.image(s)),
            other => other,
        };
        LinearForm::normalize(self.c, Some(map(self.pos)), self.neg.map(map))
    }

    pub(crate) fn write_with(
        &self,
        f: &mut fmt::Formatter<'_>,
        var: impl Fn(Variable) -> alloc::string::String,
    ) -> fmt::Result {
        if self.c != 0 {
            write!(f, "{}+", self.c)?;
        }
        f.write_str(&var(self.pos))?;
        if let Some(b) = self.neg {
            write!(f, "-{}", var(b))?;
        }
        Ok(())
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, |v| alloc::format!("{v}"))
    }
}
