//! Concrete syntax:
//!
//! ```text
//! prog    := stmt (';' stmt)*
//! stmt    := 'skip' | assign | flow | '{' prog '}' | 'choice' '{' prog '|' prog '}'
//! assign  := '(' id ':=' term (',' id ':=' term)* ')'
//! flow    := '(' id "'" '=' term (',' id "'" '=' term)* '&' trigger ')'
//! trigger := number | pred
//! pred    := cmp | pred '&&' pred | pred '||' pred
//! cmp     := term '<=' term | term '>=' term
//! term    := number | number '*' id | id | id '*' number | term ('+' | '-') term | '-' term
//! ```

use super::ast::{AffineTerm, CmpOp, HybAtom, HybPred, HybProg, Trigger};
use crate::error::{Error, Result};
use crate::lex::{describe, Cursor, Tok};

pub fn parse_hyb(text: &str) -> Result<HybProg> {
    let mut c = Cursor::new(text)?;
    let p = prog(&mut c)?;
    if !c.at_end() {
        return c.error(format!("unexpected {}", describe(c.peek())));
    }
    Ok(p)
}

fn prog(c: &mut Cursor) -> Result<HybProg> {
    let mut p = stmt(c)?;
    while c.eat(";") {
        p = HybProg::seq(p, stmt(c)?);
    }
    Ok(p)
}

fn stmt(c: &mut Cursor) -> Result<HybProg> {
    if c.is_keyword("skip") {
        c.next();
        return Ok(HybProg::Skip);
    }
    if c.is_keyword("choice") {
        c.next();
        c.expect("{")?;
        let p = prog(c)?;
        c.expect("|")?;
        let q = prog(c)?;
        c.expect("}")?;
        return Ok(HybProg::choice(p, q));
    }
    if c.eat("{") {
        let p = prog(c)?;
        c.expect("}")?;
        return Ok(p);
    }
    if c.is_sym("(") {
        return atom(c).map(HybProg::Atom);
    }
    c.error(format!("expected a statement, found {}", describe(c.peek())))
}

fn atom(c: &mut Cursor) -> Result<HybAtom> {
    c.expect("(")?;
    let flow = matches!(c.peek_at(1), Tok::Sym("'"));
    let mut eqs: Vec<(String, AffineTerm)> = vec![];
    loop {
        let v = c.ident()?;
        if eqs.iter().any(|(w, _)| *w == v) {
            return Err(Error::DuplicateVariable(v));
        }
        if flow {
            c.expect("'")?;
            c.expect("=")?;
        } else {
            c.expect(":=")?;
        }
        eqs.push((v, term(c)?));
        if !c.eat(",") {
            break;
        }
    }
    if !flow {
        c.expect(")")?;
        return Ok(HybAtom::Assign(eqs));
    }
    c.expect("&")?;
    let first = term(c)?;
    let trig = if c.is_sym(")") {
        if !first.is_constant() || first.constant < 0.0 || !first.constant.is_finite() {
            return c.error("a duration must be a non-negative number");
        }
        Trigger::Duration(first.constant)
    } else {
        Trigger::Event(pred(c, Some(first))?)
    };
    c.expect(")")?;
    Ok(HybAtom::Flow(eqs, trig))
}

fn pred(c: &mut Cursor, first: Option<AffineTerm>) -> Result<HybPred> {
    let mut p = conj(c, first)?;
    while c.eat("||") {
        p = HybPred::Or(Box::new(p), Box::new(conj(c, None)?));
    }
    Ok(p)
}

fn conj(c: &mut Cursor, first: Option<AffineTerm>) -> Result<HybPred> {
    let mut p = cmp(c, first)?;
    while c.eat("&&") {
        p = HybPred::And(Box::new(p), Box::new(cmp(c, None)?));
    }
    Ok(p)
}

fn cmp(c: &mut Cursor, first: Option<AffineTerm>) -> Result<HybPred> {
    let l = match first {
        Some(t) => t,
        None => term(c)?,
    };
    let op = if c.eat("<=") {
        CmpOp::Le
    } else if c.eat(">=") {
        CmpOp::Ge
    } else {
        return c.error(format!("expected `<=` or `>=`, found {}", describe(c.peek())));
    };
    Ok(HybPred::Cmp(l, op, term(c)?))
}

fn term(c: &mut Cursor) -> Result<AffineTerm> {
    let mut t = product(c)?;
    loop {
        if c.eat("+") {
            t = t.plus(&product(c)?);
        } else if c.eat("-") {
            t = t.plus(&product(c)?.scale(-1.0));
        } else {
            return Ok(t);
        }
    }
}

fn number(c: &mut Cursor, s: &str) -> Result<f64> {
    s.parse::<f64>().or_else(|_| c.error(format!("bad number `{s}`")))
}

fn product(c: &mut Cursor) -> Result<AffineTerm> {
    if c.eat("-") {
        return Ok(product(c)?.scale(-1.0));
    }
    match c.peek().clone() {
        Tok::Num(s) => {
            c.next();
            let r = number(c, &s)?;
            if c.eat("*") {
                Ok(AffineTerm::var(&c.ident()?, r))
            } else {
                Ok(AffineTerm::constant(r))
            }
        }
        Tok::Ident(v) => {
            c.next();
            if c.eat("*") {
                let neg = c.eat("-");
                let s = match c.next() {
                    Tok::Num(s) => s,
                    t => return c.error(format!("expected a number, found {}", describe(&t))),
                };
                let r = number(c, &s)?;
                Ok(AffineTerm::var(&v, if neg { -r } else { r }))
            } else {
                Ok(AffineTerm::var(&v, 1.0))
            }
        }
        t => c.error(format!("expected a term, found {}", describe(&t))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vehicle() {
        let p = parse_hyb("(a := 10) ; (p' = v, v' = a & 3)").unwrap();
        match p {
            HybProg::Seq(a, b) => {
                assert!(matches!(*a, HybProg::Atom(HybAtom::Assign(_))));
                assert!(matches!(*b, HybProg::Atom(HybAtom::Flow(_, Trigger::Duration(d))) if d == 3.0));
            }
            _ => panic!("{p:?}"),
        }
        assert_eq!(parse_hyb("skip").unwrap(), HybProg::Skip);
    }

    #[test]
    fn event_flow() {
        let p = parse_hyb("(x' = 1 & x >= 2 && x <= 2)").unwrap();
        assert!(matches!(p, HybProg::Atom(HybAtom::Flow(_, Trigger::Event(HybPred::And(..))))));
        let q = parse_hyb("(v := v * -0.5, p := p)").unwrap();
        let HybProg::Atom(HybAtom::Assign(xs)) = q else { panic!() };
        assert_eq!(xs[0].1, AffineTerm::var("v", -0.5));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_hyb("(x := 1, x := 2)"), Err(Error::DuplicateVariable(v)) if v == "x"));
        assert!(matches!(parse_hyb("(x' = 1 & )"), Err(Error::Parse { line: 1, col: 11, .. })));
        assert!(matches!(parse_hyb("skip ;\n (x' = 1 & -1)"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_hyb("choice { skip | skip }").is_ok());
    }

    #[test]
    fn terms_normalise() {
        let HybProg::Atom(HybAtom::Assign(xs)) = parse_hyb("(x := 2*y + 3 - y + 0.5*x - 0.5*x)").unwrap() else {
            panic!()
        };
        assert_eq!(xs[0].1, AffineTerm::var("y", 1.0).plus(&AffineTerm::constant(3.0)));
    }
}
