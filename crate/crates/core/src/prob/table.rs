//! Atom tables: the interpretation of atoms and tests on a finite carrier.
//!
//! JSON form:
//! `{"carrier": [..], "atoms": {name: {state: {state-or-"⊥": "p/q"}}}, "tests": {name: [states]}}`

use crate::combine::Test;
use crate::error::{Error, Result};
use crate::monad::dist::Dist;
use crate::monad::maybe::Maybe;
use crate::monad::Kernel;
use crate::rat::{parse_rat, Rat};
use num_traits::{One, Zero};
use serde_json::{Map, Value};
use std::collections::BTreeMap;

pub const BOTTOM: &str = "⊥";

#[derive(Clone, Debug, PartialEq)]
pub struct AtomTable {
    pub carrier: Vec<String>,
    pub atoms: BTreeMap<String, Kernel<Dist<Maybe<usize>>>>,
    pub tests: BTreeMap<String, Test>,
}

fn label(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        Value::Bool(b) => Ok(b.to_string()),
        _ => Err(Error::InvalidValue(format!("carrier elements must be strings or numbers, got {v}"))),
    }
}

fn weight(v: &Value) -> Result<Rat> {
    match v {
        Value::String(s) => parse_rat(s),
        Value::Number(n) => parse_rat(&n.to_string()),
        _ => Err(Error::InvalidValue(format!("weights must be \"p/q\" strings, got {v}"))),
    }
}

impl AtomTable {
    pub fn new(carrier: Vec<String>) -> Result<Self> {
        for (i, s) in carrier.iter().enumerate() {
            if s == BOTTOM || carrier[..i].contains(s) {
                return Err(Error::InvalidValue(format!("bad or repeated state `{s}`")));
            }
        }
        Ok(AtomTable { carrier, atoms: BTreeMap::new(), tests: BTreeMap::new() })
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn state(&self, name: &str) -> Result<usize> {
        self.carrier.iter().position(|s| s == name).ok_or_else(|| Error::UnknownState(name.into()))
    }

    pub fn state_name(&self, x: &Maybe<usize>) -> String {
        match x {
            Maybe::Just(i) => self.carrier[*i].clone(),
            Maybe::Bottom => BOTTOM.into(),
        }
    }

    /// Adds an atom after checking that every row is a distribution.
    pub fn add_atom(&mut self, name: &str, k: Kernel<Dist<Maybe<usize>>>) -> Result<()> {
        if k.domain() != self.len() || k.codomain != self.len() {
            return Err(Error::CarrierMismatch(format!("atom `{name}` is not a kernel on the carrier")));
        }
        for (x, row) in k.rows.iter().enumerate() {
            if row.total() != Rat::one() {
                return Err(Error::InvalidValue(format!("atom `{name}` at `{}` has mass {}", self.carrier[x], row.total())));
            }
            if row.support().any(|y| matches!(y, Maybe::Just(j) if *j >= self.len())) {
                return Err(Error::CarrierMismatch(format!("atom `{name}` leaves the carrier")));
            }
        }
        self.atoms.insert(name.into(), k);
        Ok(())
    }

    /// Adds an atom without failure mass.
    pub fn add_total_atom(&mut self, name: &str, k: &Kernel<Dist<usize>>) -> Result<()> {
        let rows = k.rows.iter().map(|d| d.map(|y| Maybe::Just(*y))).collect();
        self.add_atom(name, Kernel::new(k.codomain, rows))
    }

    pub fn add_test(&mut self, name: &str, t: Test) -> Result<()> {
        if t.carrier() != self.len() {
            return Err(Error::CarrierMismatch(format!("test `{name}` is not on the carrier")));
        }
        self.tests.insert(name.into(), t);
        Ok(())
    }

    /// `x ↦ p·δ₁ + (1−p)·δ₀`; the carrier must contain states `0` and `1`.
    pub fn add_bernoulli(&mut self, name: &str, p: Rat) -> Result<()> {
        if p < Rat::zero() || p > Rat::one() {
            return Err(Error::InvalidValue(format!("bernoulli parameter {p} outside [0, 1]")));
        }
        let (zero, one) = (self.state("0")?, self.state("1")?);
        let row = Dist::from_pairs([(Maybe::Just(one), p), (Maybe::Just(zero), Rat::one() - p)])?;
        self.add_atom(name, Kernel::new(self.len(), vec![row; self.len()]))
    }

    pub fn atom(&self, name: &str) -> Result<&Kernel<Dist<Maybe<usize>>>> {
        self.atoms.get(name).ok_or_else(|| Error::UnknownAtom(name.into()))
    }

    pub fn test(&self, name: &str) -> Result<&Test> {
        self.tests.get(name).ok_or_else(|| Error::UnknownTest(name.into()))
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| Error::InvalidValue("atom table must be a JSON object".into()))?;
        let carrier = obj
            .get("carrier")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::InvalidValue("missing `carrier` array".into()))?
            .iter()
            .map(label)
            .collect::<Result<Vec<_>>>()?;
        let mut t = AtomTable::new(carrier)?;
        let empty = Map::new();
        let atoms = obj.get("atoms").map(|a| a.as_object().ok_or_else(|| Error::InvalidValue("`atoms` must be an object".into())));
        for (name, rows) in atoms.transpose()?.unwrap_or(&empty) {
            let rows = rows.as_object().ok_or_else(|| Error::InvalidValue(format!("atom `{name}` must be an object")))?;
            let mut k = Vec::with_capacity(t.len());
            for x in &t.carrier {
                let row = rows
                    .get(x)
                    .and_then(Value::as_object)
                    .ok_or_else(|| Error::InvalidValue(format!("atom `{name}` is not defined at `{x}`")))?;
                let pairs = row
                    .iter()
                    .map(|(y, w)| {
                        let y = if y == BOTTOM { Maybe::Bottom } else { Maybe::Just(t.state(y)?) };
                        Ok((y, weight(w)?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                k.push(Dist::from_pairs(pairs)?);
            }
            t.add_atom(name, Kernel::new(t.len(), k))?;
        }
        let tests = obj.get("tests").map(|a| a.as_object().ok_or_else(|| Error::InvalidValue("`tests` must be an object".into())));
        for (name, states) in tests.transpose()?.unwrap_or(&empty) {
            let states = states.as_array().ok_or_else(|| Error::InvalidValue(format!("test `{name}` must be an array")))?;
            let mut truth = vec![false; t.len()];
            for s in states {
                truth[t.state(&label(s)?)?] = true;
            }
            t.add_test(name, Test::new(truth))?;
        }
        Ok(t)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse { line: e.line(), col: e.column(), msg: e.to_string() })?;
        Self::from_json(&v)
    }

    pub fn to_json(&self) -> Value {
        let atoms: Map<String, Value> = self
            .atoms
            .iter()
            .map(|(name, k)| {
                let rows: Map<String, Value> = k
                    .rows
                    .iter()
                    .enumerate()
                    .map(|(x, d)| {
                        let row: Map<String, Value> = d.iter().map(|(y, w)| (self.state_name(y), Value::String(w.to_string()))).collect();
                        (self.carrier[x].clone(), Value::Object(row))
                    })
                    .collect();
                (name.clone(), Value::Object(rows))
            })
            .collect();
        let tests: Map<String, Value> = self
            .tests
            .iter()
            .map(|(name, b)| {
                let st = (0..self.len()).filter(|x| b.holds(*x)).map(|x| Value::String(self.carrier[x].clone())).collect();
                (name.clone(), Value::Array(st))
            })
            .collect();
        serde_json::json!({ "carrier": self.carrier, "atoms": atoms, "tests": tests })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn json_round_trip() {
        let src = r#"{"carrier": ["0", "1"],
            "atoms": {"flip": {"0": {"0": "1/2", "1": "1/2"}, "1": {"⊥": "1/3", "1": "2/3"}}},
            "tests": {"one": ["1"]}}"#;
        let t = AtomTable::from_json_str(src).unwrap();
        assert_eq!(t.atom("flip").unwrap().at(1).weight(&Maybe::Bottom), rat(1, 3));
        assert!(t.test("one").unwrap().holds(1));
        assert_eq!(AtomTable::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn rejects_bad_tables() {
        let short = r#"{"carrier": ["a"], "atoms": {"x": {"a": {"a": "1/2"}}}}"#;
        assert!(AtomTable::from_json_str(short).is_err());
        let partial = r#"{"carrier": ["a", "b"], "atoms": {"x": {"a": {"a": "1"}}}}"#;
        assert!(AtomTable::from_json_str(partial).is_err());
        let unknown = r#"{"carrier": ["a"], "atoms": {"x": {"a": {"z": "1"}}}}"#;
        assert!(matches!(AtomTable::from_json_str(unknown), Err(Error::UnknownState(_))));
    }

    #[test]
    fn bernoulli() {
        let mut t = AtomTable::new(vec!["0".into(), "1".into()]).unwrap();
        t.add_bernoulli("bern3", rat(3, 10)).unwrap();
        assert_eq!(t.atom("bern3").unwrap().at(0).weight(&Maybe::Just(1)), rat(3, 10));
    }
}
