//! Concrete syntax:
//!
//! ```text
//! prog  := seq ('+[' rat ']' prog)?
//! seq   := unary (';' unary)*
//! unary := 'skip' | '0' | id | 'test' id | '(' prog ')' | 'if' id 'then' seq 'else' seq
//! rat   := int '/' int | decimal
//! ```
//!
//! `;` binds tighter than `+[λ]`, which associates to the right.

use super::ast::ProbProg;
use crate::error::Result;
use crate::lex::{describe, Cursor, Tok};
use crate::rat::{in_unit_interval, parse_rat, Rat};

pub fn parse_prob(text: &str) -> Result<ProbProg> {
    let mut c = Cursor::new(text)?;
    let p = prog(&mut c)?;
    if !c.at_end() {
        return c.error(format!("unexpected {}", describe(c.peek())));
    }
    Ok(p)
}

fn prog(c: &mut Cursor) -> Result<ProbProg> {
    let p = seq(c)?;
    if c.eat("+[") {
        let l = weight(c)?;
        c.expect("]")?;
        return Ok(ProbProg::convex(l, p, prog(c)?));
    }
    Ok(p)
}

fn weight(c: &mut Cursor) -> Result<Rat> {
    let mut text = String::new();
    while !c.is_sym("]") && !c.at_end() {
        match c.next() {
            Tok::Num(s) => text.push_str(&s),
            Tok::Sym(s) => text.push_str(s),
            t => return c.error(format!("unexpected {} in a weight", describe(&t))),
        }
    }
    let l = parse_rat(&text).or_else(|_| c.error(format!("bad weight `{text}`")))?;
    if !in_unit_interval(&l) {
        return c.error(format!("weight {l} is outside [0, 1]"));
    }
    Ok(l)
}

fn seq(c: &mut Cursor) -> Result<ProbProg> {
    let mut p = unary(c)?;
    while c.eat(";") {
        p = ProbProg::seq(p, unary(c)?);
    }
    Ok(p)
}

fn keyword(c: &mut Cursor, k: &str) -> Result<()> {
    if c.is_keyword(k) {
        c.next();
        Ok(())
    } else {
        c.error(format!("expected `{k}`, found {}", describe(c.peek())))
    }
}

fn unary(c: &mut Cursor) -> Result<ProbProg> {
    if c.eat("(") {
        let p = prog(c)?;
        c.expect(")")?;
        return Ok(p);
    }
    match c.peek().clone() {
        Tok::Num(s) if s == "0" => {
            c.next();
            Ok(ProbProg::Zero)
        }
        Tok::Ident(k) if k == "skip" => {
            c.next();
            Ok(ProbProg::Skip)
        }
        Tok::Ident(k) if k == "test" => {
            c.next();
            Ok(ProbProg::Test(c.ident()?))
        }
        Tok::Ident(k) if k == "if" => {
            c.next();
            let b = c.ident()?;
            keyword(c, "then")?;
            let p = seq(c)?;
            keyword(c, "else")?;
            let q = seq(c)?;
            Ok(ProbProg::ite(&b, p, q))
        }
        Tok::Ident(k) if ["then", "else"].contains(&k.as_str()) => c.error(format!("unexpected `{k}`")),
        Tok::Ident(a) => {
            c.next();
            Ok(ProbProg::Atom(a))
        }
        t => c.error(format!("expected a program, found {}", describe(&t))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::rat::rat;

    #[test]
    fn examples() {
        assert_eq!(
            parse_prob("a +[3/10] b").unwrap(),
            ProbProg::convex(rat(3, 10), ProbProg::atom("a"), ProbProg::atom("b"))
        );
        assert_eq!(parse_prob("skip ; a").unwrap(), ProbProg::seq(ProbProg::Skip, ProbProg::atom("a")));
        let intro = parse_prob("if b1 then bern3 else if b2 then bern6 else 0").unwrap();
        assert_eq!(
            intro,
            ProbProg::ite("b1", ProbProg::atom("bern3"), ProbProg::ite("b2", ProbProg::atom("bern6"), ProbProg::Zero))
        );
        assert_eq!(parse_prob("a +[0.25] b").unwrap(), parse_prob("a +[1/4] b").unwrap());
    }

    #[test]
    fn precedence() {
        let p = parse_prob("a ; b +[1/2] c ; d").unwrap();
        assert!(matches!(p, ProbProg::Convex(..)));
        let q = parse_prob("(a +[1/2] b) ; c").unwrap();
        assert!(matches!(q, ProbProg::Seq(..)));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_prob("a +[3/2] b"), Err(Error::Parse { .. })));
        assert!(matches!(parse_prob("a ;"), Err(Error::Parse { line: 1, col: 4, .. })));
        assert!(parse_prob("if b then a").is_err());
    }
}
