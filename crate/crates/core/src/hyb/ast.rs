//! Syntax of the hybrid language.

use std::collections::BTreeMap;
use std::fmt;

/// `Σ cᵢ·xᵢ + c`, the normal form of `t = r | r·x | t + t`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct AffineTerm {
    pub coeffs: BTreeMap<String, f64>,
    pub constant: f64,
}

impl AffineTerm {
    pub fn constant(c: f64) -> Self {
        AffineTerm { coeffs: BTreeMap::new(), constant: c }
    }

    pub fn var(name: &str, c: f64) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(name.to_string(), c);
        AffineTerm { coeffs, constant: 0.0 }
    }

    pub fn plus(mut self, other: &AffineTerm) -> Self {
        for (v, c) in &other.coeffs {
            *self.coeffs.entry(v.clone()).or_insert(0.0) += c;
        }
        self.coeffs.retain(|_, c| *c != 0.0);
        self.constant += other.constant;
        self
    }

    pub fn scale(mut self, k: f64) -> Self {
        self.coeffs.values_mut().for_each(|c| *c *= k);
        self.coeffs.retain(|_, c| *c != 0.0);
        self.constant *= k;
        self
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn vars(&self) -> impl Iterator<Item = &String> {
        self.coeffs.keys()
    }
}

impl fmt::Display for AffineTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.coeffs.iter().map(|(v, c)| format!("{c}*{v}")).collect();
        if self.constant != 0.0 || parts.is_empty() {
            parts.push(format!("{}", self.constant));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmpOp {
    Le,
    Ge,
}

/// Predicates built from `≤`/`≥` atoms; there is no negation, so every
/// predicate denotes a closed set.
#[derive(Clone, Debug, PartialEq)]
pub enum HybPred {
    Cmp(AffineTerm, CmpOp, AffineTerm),
    And(Box<HybPred>, Box<HybPred>),
    Or(Box<HybPred>, Box<HybPred>),
}

impl HybPred {
    pub fn vars(&self) -> Vec<&String> {
        match self {
            HybPred::Cmp(l, _, r) => l.vars().chain(r.vars()).collect(),
            HybPred::And(a, b) | HybPred::Or(a, b) => {
                let mut v = a.vars();
                v.extend(b.vars());
                v
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Trigger {
    Duration(f64),
    Event(HybPred),
}

#[derive(Clone, Debug, PartialEq)]
pub enum HybAtom {
    Assign(Vec<(String, AffineTerm)>),
    Flow(Vec<(String, AffineTerm)>, Trigger),
}

#[derive(Clone, Debug, PartialEq)]
pub enum HybProg {
    Atom(HybAtom),
    Skip,
    Seq(Box<HybProg>, Box<HybProg>),
    Choice(Box<HybProg>, Box<HybProg>),
}

impl HybProg {
    pub fn seq(p: HybProg, q: HybProg) -> HybProg {
        HybProg::Seq(Box::new(p), Box::new(q))
    }

    pub fn choice(p: HybProg, q: HybProg) -> HybProg {
        HybProg::Choice(Box::new(p), Box::new(q))
    }

    pub fn has_choice(&self) -> bool {
        match self {
            HybProg::Choice(..) => true,
            HybProg::Seq(p, q) => p.has_choice() || q.has_choice(),
            _ => false,
        }
    }

    pub fn has_assignment(&self) -> bool {
        match self {
            HybProg::Atom(HybAtom::Assign(_)) => true,
            HybProg::Seq(p, q) | HybProg::Choice(p, q) => p.has_assignment() || q.has_assignment(),
            _ => false,
        }
    }

    /// Variables in order of first occurrence.
    pub fn variables(&self) -> Vec<String> {
        fn walk(p: &HybProg, out: &mut Vec<String>) {
            let mut push = |v: &String| {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            };
            match p {
                HybProg::Atom(HybAtom::Assign(xs)) => xs.iter().for_each(|(v, t)| {
                    push(v);
                    t.vars().for_each(&mut push);
                }),
                HybProg::Atom(HybAtom::Flow(xs, trig)) => {
                    xs.iter().for_each(|(v, t)| {
                        push(v);
                        t.vars().for_each(&mut push);
                    });
                    if let Trigger::Event(psi) = trig {
                        psi.vars().into_iter().for_each(push);
                    }
                }
                HybProg::Skip => {}
                HybProg::Seq(a, b) | HybProg::Choice(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        let mut out = vec![];
        walk(self, &mut out);
        out
    }
}
