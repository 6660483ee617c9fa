//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Exponent vectors are packed into a `u64`, eight bits per variable with
//! variable 0 in the most significant byte, so integer order on the packed
//! key is lexicographic order with x_0 > x_1 > ...

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use cremona_core::rational::{fmt_q, parse_q, Q};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{PolyError, Result};

pub const MAX_VARS: usize = 8;

pub type Exp = u64;

fn shift(i: usize) -> u32 {
    8 * (MAX_VARS - 1 - i) as u32
}

pub fn pack(exps: &[u32]) -> Exp {
    assert!(exps.len() <= MAX_VARS);
    exps.iter().enumerate().fold(0, |acc, (i, &e)| {
        assert!(e < 256, "exponent overflow");
        acc | ((e as u64) << shift(i))
    })
}

pub fn exponent(e: Exp, i: usize) -> u32 {
    ((e >> shift(i)) & 0xff) as u32
}

pub fn unpack(e: Exp, n: usize) -> Vec<u32> {
    (0..n).map(|i| exponent(e, i)).collect()
}

pub fn total_degree(e: Exp) -> u32 {
    (0..MAX_VARS).map(|i| exponent(e, i)).sum()
}

/// Ordered variable names shared between polynomials of one ring.
pub type Vars = Arc<Vec<String>>;

fn cached(cell: &'static OnceLock<Vars>, names: &[&str]) -> Vars {
    cell.get_or_init(|| Arc::new(names.iter().map(|s| s.to_string()).collect())).clone()
}

/// Homogeneous coordinates x_0..x_3 on P^3.
pub fn p3_vars() -> Vars {
    static V: OnceLock<Vars> = OnceLock::new();
    cached(&V, &["x0", "x1", "x2", "x3"])
}

/// Coordinates [u:v] on P^1.
pub fn curve_vars() -> Vars {
    static V: OnceLock<Vars> = OnceLock::new();
    cached(&V, &["u", "v"])
}

/// Coordinates [X:Y:Z] on an exceptional plane.
pub fn plane_vars() -> Vars {
    static V: OnceLock<Vars> = OnceLock::new();
    cached(&V, &["X", "Y", "Z"])
}

pub fn vars_named(names: &[&str]) -> Vars {
    Arc::new(names.iter().map(|s| s.to_string()).collect())
}

#[derive(Clone)]
pub struct MultiPoly {
    vars: Vars,
    terms: BTreeMap<Exp, Q>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl MultiPoly {
    pub fn zero(vars: Vars) -> MultiPoly {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Vars, c: Q) -> MultiPoly {
        let mut p = MultiPoly::zero(vars);
        p.add_term(0, c);
        p
    }

    pub fn var(vars: Vars, i: usize) -> MultiPoly {
        let n = vars.len();
        let mut e = vec![0; n];
        e[i] = 1;
        MultiPoly::monomial(vars, &e, Q::one())
    }

    pub fn monomial(vars: Vars, exps: &[u32], c: Q) -> MultiPoly {
        assert_eq!(exps.len(), vars.len());
        let mut p = MultiPoly::zero(vars);
        p.add_term(pack(exps), c);
        p
    }

    /// Linear form sum c_i x_i.
    pub fn linear(vars: Vars, coeffs: &[Q]) -> MultiPoly {
        assert_eq!(coeffs.len(), vars.len());
        let mut p = MultiPoly::zero(vars.clone());
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; vars.len()];
            e[i] = 1;
            p.add_term(pack(&e), c.clone());
        }
        p
    }

    pub fn from_terms(vars: Vars, terms: impl IntoIterator<Item = (Exp, Q)>) -> MultiPoly {
        let mut p = MultiPoly::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> &BTreeMap<Exp, Q> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Q {
        self.terms.get(&pack(exps)).cloned().unwrap_or_else(Q::zero)
    }

    fn add_term(&mut self, e: Exp, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn same_ring(&self, other: &MultiPoly) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "polynomials over different variables"
        );
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|&e| total_degree(e)).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&e| total_degree(e)).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|&e| exponent(e, i)).max().unwrap_or(0)
    }

    pub fn homogeneous_part(&self, d: u32) -> MultiPoly {
        let terms = self.terms.iter().filter(|(e, _)| total_degree(**e) == d);
        MultiPoly { vars: self.vars.clone(), terms: terms.map(|(e, c)| (*e, c.clone())).collect() }
    }

    /// Lex-leading term.
    pub fn leading_term(&self) -> Option<(Exp, &Q)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.same_ring(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, s: &Q) -> MultiPoly {
        if s.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        let terms = self.terms.iter().map(|(e, c)| (*e, c * s)).collect();
        MultiPoly { vars: self.vars.clone(), terms }
    }

    /// Integer numerators over a common denominator.
    pub fn integer_form(&self) -> (Vec<(Exp, BigInt)>, BigInt) {
        let den = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = self.terms.iter().map(|(e, c)| (*e, c.numer() * (&den / c.denom()))).collect();
        (nums, den)
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.same_ring(other);
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        let (a, da) = self.integer_form();
        let (b, db) = other.integer_form();
        let prod = mul_integer(&a, &b);
        let den = da * db;
        let terms = prod.into_iter().map(|(e, c)| (e, Q::new(c, den.clone())));
        MultiPoly { vars: self.vars.clone(), terms: terms.collect() }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut out = MultiPoly::constant(self.vars.clone(), Q::one());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = out.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    pub fn product<'a>(vars: Vars, factors: impl IntoIterator<Item = &'a MultiPoly>) -> MultiPoly {
        factors.into_iter().fold(MultiPoly::constant(vars, Q::one()), |acc, f| acc.mul(f))
    }

    pub fn derivative(&self, i: usize) -> MultiPoly {
        let one = 1u64 << shift(i);
        let mut out = MultiPoly::zero(self.vars.clone());
        for (e, c) in &self.terms {
            let k = exponent(*e, i);
            if k > 0 {
                out.add_term(e - one, c * Q::from_integer(BigInt::from(k)));
            }
        }
        out
    }

    pub fn gradient(&self) -> Vec<MultiPoly> {
        (0..self.nvars()).map(|i| self.derivative(i)).collect()
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.nvars());
        let (nums, cden) = self.integer_form();
        eval_integer_form(&nums, &cden, self.degree().unwrap_or(0), point)
    }

    /// Substitute polynomials (over a common ring) for the variables.
    pub fn compose(&self, subs: &[MultiPoly]) -> MultiPoly {
        assert_eq!(subs.len(), self.nvars());
        let vars = subs[0].vars.clone();
        let maxes: Vec<u32> = (0..self.nvars()).map(|i| self.degree_in(i)).collect();
        let powers: Vec<Vec<MultiPoly>> = subs
            .iter()
            .zip(&maxes)
            .map(|(s, &m)| {
                let mut v = vec![MultiPoly::constant(vars.clone(), Q::one())];
                for k in 1..=m as usize {
                    let next = v[k - 1].mul(s);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = MultiPoly::zero(vars.clone());
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(vars.clone(), c.clone());
            for (i, pw) in powers.iter().enumerate() {
                let k = exponent(*e, i) as usize;
                if k > 0 {
                    t = t.mul(&pw[k]);
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Exact quotient by `d`, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        self.same_ring(d);
        let (lt_e, lt_c) = d.leading_term()?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.vars.clone());
        while let Some((e, c)) = rem.leading_term() {
            if (0..self.nvars()).any(|i| exponent(e, i) < exponent(lt_e, i)) {
                return None;
            }
            let qe = e - lt_e;
            let qc = c / lt_c;
            let mut t = MultiPoly::zero(self.vars.clone());
            t.add_term(qe, qc);
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// The scalar `s` with `self = s * other`, if one exists.
    pub fn ratio_to(&self, other: &MultiPoly) -> Option<Q> {
        self.same_ring(other);
        if self.terms.len() != other.terms.len() {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        let s = c / other.terms.get(e)?;
        let ok = self.terms.iter().all(|(e, c)| other.terms.get(e).is_some_and(|d| &(d * &s) == c));
        ok.then_some(s)
    }

    pub fn proportional(&self, other: &MultiPoly) -> bool {
        self.ratio_to(other).is_some()
    }

    /// Scale to primitive integer coefficients with positive leading term.
    pub fn normalized(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let (nums, _) = self.integer_form();
        let g = nums.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
        let sign = if nums.last().expect("nonzero").1.is_negative() { -1 } else { 1 };
        let g = g * sign;
        let terms = nums.into_iter().map(|(e, c)| (e, Q::from_integer(c / &g)));
        MultiPoly { vars: self.vars.clone(), terms: terms.collect() }
    }

    /// Scale so the first nonzero coefficient of a linear form is 1.
    pub fn monic_linear(&self) -> MultiPoly {
        let lead = (0..self.nvars()).find_map(|i| {
            let mut e = vec![0; self.nvars()];
            e[i] = 1;
            let c = self.coeff(&e);
            (!c.is_zero()).then_some(c)
        });
        match lead {
            Some(c) => self.scale(&(Q::one() / c)),
            None => self.clone(),
        }
    }

    /// Coefficients of a linear form, variable by variable.
    pub fn linear_coeffs(&self) -> Vec<Q> {
        (0..self.nvars())
            .map(|i| {
                let mut e = vec![0; self.nvars()];
                e[i] = 1;
                self.coeff(&e)
            })
            .collect()
    }

    /// Reinterpret over a different ring of the same size.
    pub fn rename(&self, vars: Vars) -> MultiPoly {
        assert_eq!(vars.len(), self.nvars());
        MultiPoly { vars, terms: self.terms.clone() }
    }

    /// Substitute a value for variable `i`, keeping it in the ring.
    pub fn specialize(&self, i: usize, value: &Q) -> MultiPoly {
        let mask = !(0xffu64 << shift(i));
        let mut out = MultiPoly::zero(self.vars.clone());
        for (e, c) in &self.terms {
            let k = exponent(*e, i);
            out.add_term(e & mask, c * num_traits::pow(value.clone(), k as usize));
        }
        out
    }

    /// Drop variable `i`, which must not occur.
    pub fn drop_var(&self, i: usize, vars: Vars) -> MultiPoly {
        assert_eq!(vars.len() + 1, self.nvars());
        let mut out = MultiPoly::zero(vars);
        for (e, c) in &self.terms {
            assert_eq!(exponent(*e, i), 0);
            let mut ex = unpack(*e, self.nvars());
            ex.remove(i);
            out.add_term(pack(&ex), c.clone());
        }
        out
    }

    pub fn dump(&self) -> PolyDump {
        let n = self.nvars();
        PolyDump {
            vars: self.vars.as_ref().clone(),
            terms: self.terms.iter().rev().map(|(e, c)| (unpack(*e, n), fmt_q(c))).collect(),
        }
    }

    pub fn from_dump(d: &PolyDump) -> Result<MultiPoly> {
        let vars = Arc::new(d.vars.clone());
        let mut p = MultiPoly::zero(vars);
        for (e, c) in &d.terms {
            if e.len() != d.vars.len() {
                return Err(PolyError::Parse(format!("exponent vector {e:?}")));
            }
            p.add_term(pack(e), parse_q(c).map_err(|e| PolyError::Parse(e.to_string()))?);
        }
        Ok(p)
    }
}

/// Serialized form: list of (exponent vector, "p/q").
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDump {
    pub vars: Vec<String>,
    pub terms: Vec<(Vec<u32>, String)>,
}

pub fn mul_integer(a: &[(Exp, BigInt)], b: &[(Exp, BigInt)]) -> Vec<(Exp, BigInt)> {
    let mut acc: HashMap<Exp, BigInt> = HashMap::with_capacity(a.len() * b.len() / 4 + 1);
    for (ea, ca) in a {
        for (eb, cb) in b {
            let t = ca * cb;
            match acc.entry(ea + eb) {
                std::collections::hash_map::Entry::Occupied(mut o) => *o.get_mut() += t,
                std::collections::hash_map::Entry::Vacant(v) => {
                    v.insert(t);
                }
            }
        }
    }
    let mut out: Vec<(Exp, BigInt)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    out.sort_by_key(|(e, _)| *e);
    out
}

pub fn power_list(x: &BigInt, top: u32) -> Vec<BigInt> {
    let mut v = Vec::with_capacity(top as usize + 1);
    v.push(BigInt::one());
    for k in 1..=top as usize {
        let next = &v[k - 1] * x;
        v.push(next);
    }
    v
}

fn power_table(xs: &[BigInt], n: usize, top: u32) -> Vec<Vec<BigInt>> {
    (0..n).map(|i| power_list(&xs[i], top)).collect()
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono: Vec<String> = (0..self.nvars())
                .filter_map(|i| match exponent(*e, i) {
                    0 => None,
                    1 => Some(self.vars[i].clone()),
                    k => Some(format!("{}^{k}", self.vars[i])),
                })
                .collect();
            let coef = if a.is_integer() { a.numer().to_string() } else { fmt_q(&a) };
            if mono.is_empty() {
                write!(f, "{coef}")?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{coef}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

/// Parse a polynomial expression with `+ - * ^`, parentheses, rational
/// literals, ring variables and named rational parameters.
pub fn parse_expr(vars: Vars, text: &str, params: &BTreeMap<String, Q>) -> Result<MultiPoly> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, pos: 0, vars, params };
    let out = parser.sum()?;
    if parser.pos != parser.tokens.len() {
        return Err(PolyError::Parse(format!("trailing input in {text}")));
    }
    Ok(out)
}

/// `parse_expr` without parameters.
pub fn parse_poly(vars: Vars, text: &str) -> Result<MultiPoly> {
    parse_expr(vars, text, &BTreeMap::new())
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token::Num(s.parse().expect("digits")));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(PolyError::Parse(format!("unexpected {c:?} in {text}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    vars: Vars,
    params: &'a BTreeMap<String, Q>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self) -> PolyError {
        PolyError::Parse(format!("unexpected token at {}: {:?}", self.pos, self.peek()))
    }

    fn sum(&mut self) -> Result<MultiPoly> {
        let mut acc = if self.eat('-') { self.product()?.neg() } else {
            self.eat('+');
            self.product()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.product()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.product()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<MultiPoly> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.power()?);
            } else if self.eat('/') {
                let d = self.power()?;
                match (d.degree(), d.terms().get(&0)) {
                    (Some(0), Some(c)) => acc = acc.scale(&(Q::one() / c)),
                    _ => return Err(PolyError::Parse("division by a non-constant".into())),
                }
            } else if matches!(self.peek(), Some(Token::Op('(')) | Some(Token::Ident(_)) | Some(Token::Num(_))) {
                acc = acc.mul(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.tokens.get(self.pos).cloned() {
                Some(Token::Num(k)) => {
                    self.pos += 1;
                    let k: u32 = k.try_into().map_err(|_| self.err())?;
                    Ok(base.pow(k))
                }
                _ => Err(self.err()),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                Ok(MultiPoly::constant(self.vars.clone(), Q::from_integer(n)))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                if let Some(i) = self.vars.iter().position(|v| *v == name) {
                    Ok(MultiPoly::var(self.vars.clone(), i))
                } else if let Some(v) = self.params.get(&name) {
                    Ok(MultiPoly::constant(self.vars.clone(), v.clone()))
                } else {
                    Err(PolyError::Parse(format!("unknown symbol {name}")))
                }
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat(')') {
                    return Err(self.err());
                }
                Ok(inner)
            }
            Some(Token::Op('-')) => {
                self.pos += 1;
                Ok(self.power()?.neg())
            }
            _ => Err(self.err()),
        }
    }
}

/// Evaluate sum c_e x^e / cden at a rational point, clearing the point's
/// denominators first so the inner loop is integral.
pub fn eval_integer_form(nums: &[(Exp, BigInt)], cden: &BigInt, top: u32, point: &[Q]) -> Q {
    let n = point.len();
    let den = point.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = point.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    let table = power_table(&ints, n, top);
    let dpow = power_list(&den, top);
    let mut acc = BigInt::zero();
    for (e, c) in nums {
        let mut t = c * &dpow[(top - total_degree(*e)) as usize];
        for (i, row) in table.iter().enumerate() {
            let k = exponent(*e, i) as usize;
            if k > 0 {
                t *= &row[k];
            }
        }
        acc += t;
    }
    Q::new(acc, cden * &dpow[top as usize])
}

/// All exponent vectors of total degree `d` in `n` variables, in
/// descending lex order.
pub fn monomials(n: usize, d: u32) -> Vec<Exp> {
    fn rec(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Exp>) {
        if i == n - 1 {
            cur.push(left);
            out.push(pack(cur));
            cur.pop();
            return;
        }
        for k in (0..=left).rev() {
            cur.push(k);
            rec(n, i + 1, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, d, &mut Vec::new(), &mut out);
    out
}

/// Polynomial from coefficients on `monomials(n, d)`.
pub fn from_coeffs(vars: Vars, monos: &[Exp], coeffs: &[Q]) -> MultiPoly {
    MultiPoly::from_terms(vars, monos.iter().copied().zip(coeffs.iter().cloned()))
}
