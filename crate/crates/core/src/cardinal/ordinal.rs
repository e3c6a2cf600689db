//! Ordinals below `ε₀` in Cantor normal form.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use super::cursor::Cursor;
use crate::error::{Error, Result};

/// `ω^β₁·c₁ + … + ω^βₖ·cₖ` with `β₁ > … > βₖ` and every `cᵢ ≥ 1`.
/// Zero is the empty sum.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Ordinal {
    terms: Vec<Term>,
}

/// One summand `ω^exponent · coefficient`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    pub exponent: Ordinal,
    pub coefficient: u64,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal::default()
    }

    pub fn one() -> Self {
        Ordinal::natural(1)
    }

    pub fn natural(n: u64) -> Self {
        if n == 0 {
            return Ordinal::zero();
        }
        Ordinal {
            terms: vec![Term {
                exponent: Ordinal::zero(),
                coefficient: n,
            }],
        }
    }

    pub fn omega() -> Self {
        Ordinal::omega_pow(Ordinal::one())
    }

    /// `ω^e`.
    pub fn omega_pow(e: Ordinal) -> Self {
        Ordinal {
            terms: vec![Term {
                exponent: e,
                coefficient: 1,
            }],
        }
    }

    /// Builds from `(exponent, coefficient)` pairs, which must already be in
    /// normal form.
    pub fn from_terms(terms: impl IntoIterator<Item = (Ordinal, u64)>) -> Result<Self> {
        let terms: Vec<Term> = terms
            .into_iter()
            .map(|(exponent, coefficient)| Term { exponent, coefficient })
            .collect();
        if terms.iter().any(|t| t.coefficient == 0) {
            return Err(Error::InvalidArgument("CNF coefficients must be positive".into()));
        }
        if terms.windows(2).any(|w| w[0].exponent <= w[1].exponent) {
            return Err(Error::InvalidArgument("CNF exponents must strictly decrease".into()));
        }
        Ok(Ordinal { terms })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.as_finite().is_some()
    }

    pub fn as_finite(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.exponent.is_zero() => Some(t.coefficient),
            _ => None,
        }
    }

    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|t| t.exponent.is_zero())
    }

    pub fn is_limit(&self) -> bool {
        !self.is_zero() && !self.is_successor()
    }

    /// `α + 1`.
    ///
    /// # Panics
    /// If a coefficient overflows `u64`.
    pub fn succ(&self) -> Self {
        self.clone() + Ordinal::one()
    }

    /// `α · n` for a natural number `n`.
    ///
    /// # Panics
    /// If a coefficient overflows `u64`.
    pub fn mul_nat(&self, n: u64) -> Self {
        if n == 0 || self.is_zero() {
            return Ordinal::zero();
        }
        let mut terms = self.terms.clone();
        terms[0].coefficient = terms[0]
            .coefficient
            .checked_mul(n)
            .expect("ordinal coefficient overflow");
        Ordinal { terms }
    }

    /// `0` for zero, `1` for successors, and for a limit the cofinality of
    /// its last exponent's `ω`-power: `ω` when that exponent is a successor,
    /// otherwise the cofinality of the exponent.
    pub fn cofinality(&self) -> Ordinal {
        match self.terms.last() {
            None => Ordinal::zero(),
            Some(t) if t.exponent.is_zero() => Ordinal::one(),
            Some(t) if t.exponent.is_successor() => Ordinal::omega(),
            Some(t) => t.exponent.cofinality(),
        }
    }

    pub(crate) fn parse_from(c: &mut Cursor<'_>) -> Result<Self> {
        let mut acc = Self::parse_summand(c)?;
        while c.eat('+') {
            acc = acc + Self::parse_summand(c)?;
        }
        Ok(acc)
    }

    fn parse_summand(c: &mut Cursor<'_>) -> Result<Self> {
        let mut acc = Self::parse_factor(c)?;
        while c.eat('*') {
            let n = c
                .number()?
                .ok_or_else(|| c.error("expected a natural number after '*'"))?;
            acc = acc.mul_nat(n);
        }
        Ok(acc)
    }

    fn parse_factor(c: &mut Cursor<'_>) -> Result<Self> {
        if let Some(n) = c.number()? {
            return Ok(Ordinal::natural(n));
        }
        if c.eat('(') {
            let inner = Self::parse_from(c)?;
            c.expect(')')?;
            return Ok(inner);
        }
        let at = c.save();
        match c.ident() {
            Some("w" | "omega" | "ω") => {
                if c.eat('^') {
                    Ok(Ordinal::omega_pow(Self::parse_factor(c)?))
                } else {
                    Ok(Ordinal::omega())
                }
            }
            _ => {
                c.restore(at);
                Err(c.error("expected an ordinal: a natural number, w, or a parenthesized sum"))
            }
        }
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let o = a.exponent.cmp(&b.exponent).then(a.coefficient.cmp(&b.coefficient));
            if o != Ordering::Equal {
                return o;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Ordinal {
    type Output = Ordinal;

    /// Terms of `self` below the leading exponent of `rhs` are absorbed.
    ///
    /// # Panics
    /// If a coefficient overflows `u64`.
    fn add(self, rhs: Ordinal) -> Ordinal {
        let Some(lead) = rhs.terms.first() else {
            return self;
        };
        let keep = self.terms.iter().take_while(|t| t.exponent >= lead.exponent).count();
        let mut terms = self.terms;
        terms.truncate(keep);
        let merge = terms.last().is_some_and(|t| t.exponent == lead.exponent);
        let mut rest = rhs.terms.into_iter();
        if merge {
            let last = terms.last_mut().unwrap();
            let lead = rest.next().unwrap();
            last.coefficient = last
                .coefficient
                .checked_add(lead.coefficient)
                .expect("ordinal coefficient overflow");
        }
        terms.extend(rest);
        Ordinal { terms }
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::natural(n)
    }
}

impl FromStr for Ordinal {
    type Err = Error;

    /// Accepts sums of `n`, `w`, `w^E` and parenthesized sums, each optionally
    /// multiplied by a natural number: `w^(w+1)*3 + w + 2`. `omega` and `ω`
    /// are synonyms of `w`. Sums need not be in normal form.
    fn from_str(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s);
        let o = Ordinal::parse_from(&mut c)?;
        c.finish()?;
        Ok(o)
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            match t.exponent.as_finite() {
                Some(0) => write!(f, "{}", t.coefficient)?,
                Some(1) => f.write_str("w")?,
                Some(k) => write!(f, "w^{k}")?,
                None => {
                    let e = &t.exponent;
                    if e.terms.len() == 1 && e.terms[0].coefficient == 1 {
                        write!(f, "w^{e}")?;
                    } else {
                        write!(f, "w^({e})")?;
                    }
                }
            }
            if t.coefficient > 1 && !t.exponent.is_zero() {
                write!(f, "*{}", t.coefficient)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        for s in [
            "0",
            "1",
            "7",
            "w",
            "w+1",
            "w*2",
            "w*2+1",
            "w^2",
            "w^w",
            "w^(w+1)*3+w+2",
            "w^w^w",
            "w^(w*2)",
        ] {
            assert_eq!(o(s).to_string(), s);
        }
        assert_eq!(o("1 + w"), o("w"));
        assert_eq!(o("omega + ω"), o("w*2"));
        assert_eq!(o("(w+1)*3"), o("w*3+1"));
        assert!("w^".parse::<Ordinal>().is_err());
        assert!("2^w".parse::<Ordinal>().is_err());
        assert!("x".parse::<Ordinal>().is_err());
        assert!("w)".parse::<Ordinal>().is_err());
    }

    #[test]
    fn ordering() {
        let chain = [
            "0", "1", "2", "w", "w+1", "w*2", "w^2", "w^2+w*5", "w^w", "w^(w+1)", "w^w^w",
        ];
        for w in chain.windows(2) {
            assert!(o(w[0]) < o(w[1]), "{} < {}", w[0], w[1]);
        }
    }

    #[test]
    fn addition_absorbs() {
        assert_eq!(o("1") + o("w"), o("w"));
        assert_eq!(o("w") + o("1"), o("w+1"));
        assert_eq!(o("w+5") + o("w"), o("w*2"));
        assert_eq!(o("w^2+w") + o("w^2*3+1"), o("w^2*4+1"));
        assert_eq!(o("3") + o("4"), o("7"));
        assert_eq!(o("w") + Ordinal::zero(), o("w"));
    }

    #[test]
    fn cofinalities() {
        assert_eq!(o("0").cofinality(), o("0"));
        assert_eq!(o("5").cofinality(), o("1"));
        assert_eq!(o("w").cofinality(), o("w"));
        assert_eq!(o("w*2+1").cofinality(), o("1"));
        assert_eq!(o("w^w").cofinality(), o("w"));
        assert_eq!(o("w^(w+1)").cofinality(), o("w"));
        assert_eq!(o("w^w^w+w^3").cofinality(), o("w"));
    }

    #[test]
    fn from_terms_validates() {
        assert!(Ordinal::from_terms([(o("1"), 2), (o("0"), 1)]).is_ok());
        assert!(Ordinal::from_terms([(o("0"), 1), (o("1"), 2)]).is_err());
        assert!(Ordinal::from_terms([(o("1"), 0)]).is_err());
    }
}
