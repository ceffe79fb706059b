use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::field::{common_extension, Embedding, FieldRef};
use crate::exactnum::{AlgebraicNumber, FieldElem, Rat};

/// A finite Puiseux series `x = sum c_k y^{e_k}` with strictly increasing
/// positive exponents and nonzero coefficients.
///
/// Alongside the exact coefficients, the series keeps them as elements of
/// one number field so that it can be substituted into polynomials.
#[derive(Clone)]
pub struct TruncatedPuiseux {
    terms: Vec<(Rat, AlgebraicNumber)>,
    field: FieldRef,
    elems: Vec<FieldElem>,
}

fn check_exponents<'a>(exps: impl Iterator<Item = &'a Rat>) -> Result<()> {
    let mut last = Rat::zero();
    for e in exps {
        if !e.is_positive() {
            return Err(Error::InvalidArc(format!("exponent {e} is not positive")));
        }
        if e <= &last {
            return Err(Error::InvalidArc("exponents must increase strictly".into()));
        }
        last = e.clone();
    }
    Ok(())
}

impl TruncatedPuiseux {
    pub fn zero() -> Self {
        TruncatedPuiseux {
            terms: Vec::new(),
            field: None,
            elems: Vec::new(),
        }
    }

    /// Series with rational coefficients; zero coefficients are dropped.
    pub fn from_rational(terms: Vec<(Rat, Rat)>) -> Result<Self> {
        let terms: Vec<(Rat, Rat)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        check_exponents(terms.iter().map(|(e, _)| e))?;
        Ok(TruncatedPuiseux {
            elems: terms.iter().map(|(_, c)| FieldElem::rational(c.clone())).collect(),
            terms: terms
                .into_iter()
                .map(|(e, c)| (e, AlgebraicNumber::from_rat(c)))
                .collect(),
            field: None,
        })
    }

    /// Series with algebraic coefficients; zero coefficients are dropped.
    pub fn from_algebraic(terms: Vec<(Rat, AlgebraicNumber)>) -> Result<Self> {
        let terms: Vec<(Rat, AlgebraicNumber)> =
            terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        check_exponents(terms.iter().map(|(e, _)| e))?;
        let coeffs: Vec<AlgebraicNumber> = terms.iter().map(|(_, c)| c.clone()).collect();
        let (field, elems) = common_extension(&coeffs);
        Ok(TruncatedPuiseux {
            terms,
            field,
            elems,
        })
    }

    pub fn terms(&self) -> &[(Rat, AlgebraicNumber)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    /// Terms as `(exponent, field element)` pairs.
    pub fn field_terms(&self) -> Vec<(Rat, FieldElem)> {
        self.terms
            .iter()
            .map(|(e, _)| e.clone())
            .zip(self.elems.iter().cloned())
            .collect()
    }

    /// Least common denominator of the exponents.
    pub fn ramification(&self) -> u64 {
        use num_integer::Integer;
        use num_traits::ToPrimitive;
        self.terms
            .iter()
            .fold(num_bigint::BigInt::one(), |l, (e, _)| l.lcm(e.denom()))
            .to_u64()
            .unwrap()
    }

    pub fn last_exponent(&self) -> Option<&Rat> {
        self.terms.last().map(|(e, _)| e)
    }

    pub fn is_real(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_real())
    }

    /// Terms with exponent strictly below `e`.
    pub fn below(&self, e: &Rat) -> Self {
        let k = self.terms.iter().take_while(|(x, _)| x < e).count();
        self.head(k)
    }

    /// The first `k` terms.
    pub fn head(&self, k: usize) -> Self {
        TruncatedPuiseux {
            terms: self.terms[..k].to_vec(),
            field: self.field.clone(),
            elems: self.elems[..k].to_vec(),
        }
    }

    /// Appends `c y^e` where `c` lives in the target of `emb`.
    pub(crate) fn extended(&self, emb: &Embedding, e: Rat, c: FieldElem, alg: AlgebraicNumber) -> Self {
        let mut elems: Vec<FieldElem> = self.elems.iter().map(|x| emb.apply(x)).collect();
        elems.push(c);
        let mut terms = self.terms.clone();
        terms.push((e, alg));
        TruncatedPuiseux {
            terms,
            field: emb.to.clone(),
            elems,
        }
    }

    /// `ord(self - other)`, or `None` when the series coincide.
    pub fn divergence_order(&self, other: &Self) -> Option<Rat> {
        for k in 0.. {
            match (self.terms.get(k), other.terms.get(k)) {
                (None, None) => return None,
                (Some((e, _)), None) | (None, Some((e, _))) => return Some(e.clone()),
                (Some((e1, c1)), Some((e2, c2))) => {
                    if e1 != e2 {
                        return Some(e1.min(e2).clone());
                    }
                    if c1 != c2 {
                        return Some(e1.clone());
                    }
                }
            }
        }
        unreachable!()
    }
}

impl PartialEq for TruncatedPuiseux {
    fn eq(&self, other: &Self) -> bool {
        self.divergence_order(other).is_none()
    }
}

impl fmt::Debug for TruncatedPuiseux {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TruncatedPuiseux {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let mono = if e.is_one() {
                "y".to_string()
            } else if e.is_integer() {
                format!("y^{e}")
            } else {
                format!("y^({e})")
            };
            match c.to_rat() {
                Some(r) => {
                    let neg = r.is_negative();
                    if k > 0 {
                        write!(f, "{}", if neg { " - " } else { " + " })?;
                    } else if neg {
                        write!(f, "-")?;
                    }
                    let a = r.abs();
                    if a.is_one() {
                        write!(f, "{mono}")?;
                    } else {
                        write!(f, "{a}*{mono}")?;
                    }
                }
                None => {
                    if k > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "[{c}]*{mono}")?;
                }
            }
        }
        Ok(())
    }
}

/// A real arc `prefix + c y^rho` whose coefficient `c` is left generic.
#[derive(Clone, Debug, PartialEq)]
pub struct GenericArc {
    pub prefix: TruncatedPuiseux,
    pub tail_exponent: Rat,
}

impl GenericArc {
    pub fn new(prefix: TruncatedPuiseux, tail_exponent: Rat) -> Result<Self> {
        if !tail_exponent.is_positive() {
            return Err(Error::InvalidArc("tail exponent must be positive".into()));
        }
        if prefix.last_exponent().is_some_and(|e| e >= &tail_exponent) {
            return Err(Error::InvalidArc(
                "tail exponent must exceed every prefix exponent".into(),
            ));
        }
        if !prefix.is_real() {
            return Err(Error::InvalidArc("prefix must have real coefficients".into()));
        }
        Ok(GenericArc {
            prefix,
            tail_exponent,
        })
    }
}

impl fmt::Display for GenericArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = &self.tail_exponent;
        let mono = if t.is_one() {
            "y".to_string()
        } else if t.is_integer() {
            format!("y^{t}")
        } else {
            format!("y^({t})")
        };
        if self.prefix.is_empty() {
            write!(f, "c*{mono}")
        } else {
            write!(f, "{} + c*{mono}", self.prefix)
        }
    }
}
