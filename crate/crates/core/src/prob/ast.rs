//! Syntax of the probabilistic language and its guarded extension.

use crate::rat::Rat;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ProbProg {
    Atom(String),
    Skip,
    /// Failure; extended fragment only.
    Zero,
    Seq(Box<ProbProg>, Box<ProbProg>),
    /// `p +_λ q`: `p` with probability λ.
    Convex(Rat, Box<ProbProg>, Box<ProbProg>),
    /// `if b then p else q`; extended fragment only.
    Ite(String, Box<ProbProg>, Box<ProbProg>),
    /// `test b`; extended fragment only.
    Test(String),
}

impl ProbProg {
    pub fn atom(a: &str) -> Self {
        ProbProg::Atom(a.into())
    }

    pub fn seq(p: ProbProg, q: ProbProg) -> Self {
        ProbProg::Seq(Box::new(p), Box::new(q))
    }

    pub fn convex(l: Rat, p: ProbProg, q: ProbProg) -> Self {
        ProbProg::Convex(l, Box::new(p), Box::new(q))
    }

    pub fn ite(b: &str, p: ProbProg, q: ProbProg) -> Self {
        ProbProg::Ite(b.into(), Box::new(p), Box::new(q))
    }

    /// Whether the program stays inside the base `skip ; +_λ` fragment.
    pub fn is_base(&self) -> bool {
        match self {
            ProbProg::Atom(_) | ProbProg::Skip => true,
            ProbProg::Zero | ProbProg::Ite(..) | ProbProg::Test(_) => false,
            ProbProg::Seq(p, q) | ProbProg::Convex(_, p, q) => p.is_base() && q.is_base(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            ProbProg::Atom(_) | ProbProg::Skip | ProbProg::Zero | ProbProg::Test(_) => 1,
            ProbProg::Seq(p, q) | ProbProg::Convex(_, p, q) | ProbProg::Ite(_, p, q) => 1 + p.depth().max(q.depth()),
        }
    }
}

impl fmt::Display for ProbProg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProbProg::Atom(a) => write!(f, "{a}"),
            ProbProg::Skip => write!(f, "skip"),
            ProbProg::Zero => write!(f, "0"),
            ProbProg::Test(b) => write!(f, "test {b}"),
            ProbProg::Seq(p, q) => write!(f, "({p} ; {q})"),
            ProbProg::Convex(l, p, q) => write!(f, "({p} +[{l}] {q})"),
            ProbProg::Ite(b, p, q) => write!(f, "(if {b} then {p} else {q})"),
        }
    }
}
