//! A small expression language over cardinals.
//!
//! ```text
//! expr  := aleph(ORD) | fin(N) | N
//!        | pow(expr, expr) | cf(expr) | succ(expr) | sum(expr, expr)
//!        | complements(shape)
//! shape := shape(item, …)
//! item  := full=0|1|many | kappa=expr | lambda=expr | top | bottom
//! ```

use std::fmt;
use std::str::FromStr;

use super::cursor::Cursor;
use super::{
    card_pow, card_sum_family, complement_count_symbolic, CardValue, Cardinal, ContinuumModel, FullBlocks, Ordinal,
    PartitionShape, Trivial,
};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Card(Cardinal),
    Pow(Box<Expr>, Box<Expr>),
    Cf(Box<Expr>),
    Succ(Box<Expr>),
    Sum(Box<Expr>, Box<Expr>),
    Complements(Box<ShapeExpr>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShapeExpr {
    pub full_blocks: Option<FullBlocks>,
    pub trivial: Option<Trivial>,
    pub kappa: Expr,
    pub lambda: Option<Expr>,
}

/// Parses and evaluates `text` under `model`.
pub fn eval(text: &str, model: &ContinuumModel) -> Result<CardValue> {
    text.parse::<Expr>()?.eval(model)
}

impl Expr {
    pub fn eval(&self, model: &ContinuumModel) -> Result<CardValue> {
        let exact = |e: &Expr| e.eval(model)?.into_exact(&e.to_string());
        match self {
            Expr::Card(c) => Ok(CardValue::Exact(c.clone())),
            Expr::Pow(b, e) => card_pow(&exact(b)?, &exact(e)?, model),
            Expr::Cf(c) => Ok(CardValue::Exact(exact(c)?.cofinality())),
            Expr::Succ(c) => Ok(CardValue::Exact(exact(c)?.successor())),
            Expr::Sum(i, s) => Ok(CardValue::Exact(card_sum_family(&exact(i)?, &exact(s)?)?)),
            Expr::Complements(s) => {
                let kappa = exact(&s.kappa)?;
                let shape = match s.trivial {
                    Some(Trivial::Top) => PartitionShape::top(kappa)?,
                    Some(Trivial::Bottom) => PartitionShape::bottom(kappa)?,
                    None => {
                        let full = s
                            .full_blocks
                            .ok_or_else(|| Error::InvalidArgument("shape needs full=0|1|many, top or bottom".into()))?;
                        let lambda = s.lambda.as_ref().map(exact).transpose()?;
                        PartitionShape::new(full, kappa, lambda)?
                    }
                };
                complement_count_symbolic(&shape, model)
            }
        }
    }

    fn parse_from(c: &mut Cursor<'_>) -> Result<Self> {
        if let Some(n) = c.number()? {
            return Ok(Expr::Card(Cardinal::Finite(n)));
        }
        let at = c.save();
        let name = c.ident().ok_or_else(|| c.error("expected an expression"))?;
        c.expect('(')?;
        let unary = |c: &mut Cursor<'_>| Self::parse_from(c).map(Box::new);
        let e = match name {
            "aleph" => Expr::Card(Cardinal::Aleph(Ordinal::parse_from(c)?)),
            "fin" => Expr::Card(Cardinal::Finite(
                c.number()?.ok_or_else(|| c.error("expected a natural number"))?,
            )),
            "pow" | "sum" => {
                let a = unary(c)?;
                c.expect(',')?;
                let b = unary(c)?;
                if name == "pow" {
                    Expr::Pow(a, b)
                } else {
                    Expr::Sum(a, b)
                }
            }
            "cf" => Expr::Cf(unary(c)?),
            "succ" => Expr::Succ(unary(c)?),
            "complements" => Expr::Complements(Box::new(ShapeExpr::parse_from(c)?)),
            other => {
                c.restore(at);
                return Err(c.error(format!("unknown function '{other}'")));
            }
        };
        c.expect(')')?;
        Ok(e)
    }
}

impl ShapeExpr {
    fn parse_from(c: &mut Cursor<'_>) -> Result<Self> {
        if c.ident() != Some("shape") {
            return Err(c.error("expected shape(...)"));
        }
        c.expect('(')?;
        let (mut full_blocks, mut trivial, mut kappa, mut lambda) = (None, None, None, None);
        loop {
            let at = c.save();
            match c.ident() {
                Some("top") => trivial = Some(Trivial::Top),
                Some("bottom") => trivial = Some(Trivial::Bottom),
                Some("full") => {
                    c.expect('=')?;
                    full_blocks = Some(match (c.number()?, c.ident()) {
                        (Some(0), _) => FullBlocks::Zero,
                        (Some(1), _) => FullBlocks::One,
                        (Some(_), _) | (None, Some("many")) => FullBlocks::Many,
                        _ => return Err(c.error("full takes 0, 1, or many")),
                    });
                }
                Some("kappa") => {
                    c.expect('=')?;
                    kappa = Some(Expr::parse_from(c)?);
                }
                Some("lambda") => {
                    c.expect('=')?;
                    lambda = Some(Expr::parse_from(c)?);
                }
                _ => {
                    c.restore(at);
                    return Err(c.error("expected full=, kappa=, lambda=, top or bottom"));
                }
            }
            if !c.eat(',') {
                break;
            }
        }
        c.expect(')')?;
        let kappa = kappa.ok_or_else(|| c.error("shape needs kappa="))?;
        Ok(ShapeExpr {
            full_blocks,
            trivial,
            kappa,
            lambda,
        })
    }
}

impl FromStr for Expr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s);
        let e = Expr::parse_from(&mut c)?;
        c.finish()?;
        Ok(e)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Card(c) => write!(f, "{c}"),
            Expr::Pow(a, b) => write!(f, "pow({a},{b})"),
            Expr::Cf(a) => write!(f, "cf({a})"),
            Expr::Succ(a) => write!(f, "succ({a})"),
            Expr::Sum(a, b) => write!(f, "sum({a},{b})"),
            Expr::Complements(s) => {
                let mut items = Vec::new();
                match s.trivial {
                    Some(Trivial::Top) => items.push("top".to_string()),
                    Some(Trivial::Bottom) => items.push("bottom".to_string()),
                    None => {}
                }
                match s.full_blocks {
                    Some(FullBlocks::Zero) => items.push("full=0".into()),
                    Some(FullBlocks::One) => items.push("full=1".into()),
                    Some(FullBlocks::Many) => items.push("full=many".into()),
                    None => {}
                }
                items.push(format!("kappa={}", s.kappa));
                if let Some(l) = &s.lambda {
                    items.push(format!("lambda={l}"));
                }
                write!(f, "complements(shape({}))", items.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(s: &str) -> String {
        eval(s, &ContinuumModel::Gch).unwrap().to_string()
    }

    #[test]
    fn evaluates() {
        assert_eq!(
            ev("complements(shape(full=1,kappa=aleph(0),lambda=fin(3)))"),
            "aleph(0)"
        );
        assert_eq!(
            ev("complements(shape(full=1, kappa=aleph(w), lambda=aleph(0)))"),
            "aleph(w+1)"
        );
        assert_eq!(ev("complements(shape(full=0,kappa=aleph(1)))"), "aleph(2)");
        assert_eq!(ev("complements(shape(full=many,kappa=aleph(1)))"), "aleph(2)");
        assert_eq!(ev("complements(shape(bottom,kappa=aleph(1)))"), "fin(1)");
        assert_eq!(ev("pow(aleph(w), aleph(0))"), "aleph(w+1)");
        assert_eq!(ev("pow(2, aleph(0))"), "aleph(1)");
        assert_eq!(ev("cf(aleph(w^w))"), "aleph(0)");
        assert_eq!(ev("succ(aleph(w))"), "aleph(w+1)");
        assert_eq!(ev("sum(aleph(0), 2)"), "aleph(0)");
        assert_eq!(ev("cf(pow(aleph(w), aleph(0)))"), "aleph(w+1)");
    }

    #[test]
    fn custom_model_intervals() {
        let m = ContinuumModel::from_json(r#"{"gch":false,"continuum":{"1":"3","2":"3"}}"#).unwrap();
        assert_eq!(eval("pow(aleph(2), aleph(1))", &m).unwrap().to_string(), "aleph(3)");
        assert_eq!(
            eval("pow(2, aleph(0))", &m).unwrap().to_string(),
            "[aleph(1), aleph(3)]"
        );
        assert!(matches!(eval("cf(pow(2, aleph(0)))", &m), Err(Error::Indeterminate(_))));
    }

    #[test]
    fn rejects_bad_input() {
        for s in [
            "",
            "aleph(",
            "aleph(x)",
            "foo(1)",
            "pow(1)",
            "complements(shape(full=1))",
            "aleph(0) junk",
            "fin(w)",
        ] {
            assert!(eval(s, &ContinuumModel::Gch).is_err(), "{s:?}");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "pow(aleph(w*2),fin(3))",
            "complements(shape(full=1,kappa=aleph(0),lambda=fin(3)))",
            "cf(succ(sum(aleph(1),aleph(0))))",
        ] {
            assert_eq!(s.parse::<Expr>().unwrap().to_string(), s);
        }
    }
}
