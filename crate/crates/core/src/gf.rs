//! Finite fields GF(p^m) with q = p^m <= 128, backed by full operation tables.
//!
//! An element is identified by its canonical index: the coefficient vector
//! (c_0, ..., c_{m-1}) of its polynomial representative maps to
//! `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`. Index 0 is zero and index 1 is one.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Canonical index of a field element.
pub type Elem = u8;

/// Largest supported field order.
pub const MAX_ORDER: u32 = 128;

/// A finite field. Cheap to clone; all clones share one set of tables.
#[derive(Clone)]
pub struct Field(Arc<Tables>);

struct Tables {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
}

/// Serializable description of a field: characteristic, degree and the
/// monic modulus as coefficients c_0..c_m (lowest degree first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    pub modulus: Vec<u32>,
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as p^m with p prime, if possible.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p as u32, m))
}

/// Remainder of `a` modulo the monic polynomial `b` over GF(p).
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap() % p;
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &bc) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p * p - lead * bc % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn digits(mut index: u32, p: u32, m: u32) -> Vec<u32> {
    (0..m)
        .map(|_| {
            let d = index % p;
            index /= p;
            d
        })
        .collect()
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let m = modulus.len() - 1;
    for deg in 1..=m / 2 {
        // every monic divisor candidate of degree `deg`
        for low in 0..p.pow(deg as u32) {
            let mut cand = digits(low, p, deg as u32);
            cand.push(1);
            if poly_rem(modulus, &cand, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest (by c_0, c_1, ...) monic irreducible of degree m.
fn default_modulus(p: u32, m: u32) -> Vec<u32> {
    if m == 1 {
        return vec![0, 1];
    }
    for low in 0..p.pow(m) {
        let mut cand = digits(low, p, m);
        cand.push(1);
        if is_irreducible(&cand, p) {
            return cand;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl Field {
    /// Builds GF(p^m). With `modulus = None` the default modulus is chosen:
    /// `x` for prime fields, otherwise the lexicographically smallest monic
    /// irreducible (this gives x^2+x+1 for GF(4) and x^2+1 for GF(9)).
    pub fn new(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::BadModulus("degree must be positive".into()));
        }
        let q = (p as u64).checked_pow(m).unwrap_or(u64::MAX);
        if q > MAX_ORDER as u64 {
            return Err(Error::FieldTooLarge(q));
        }
        let q = q as u32;
        let modulus = match modulus {
            None => default_modulus(p, m),
            Some(f) => {
                if f.len() != m as usize + 1 {
                    return Err(Error::DegreeMismatch {
                        expected: m as usize,
                        got: f.len().saturating_sub(1),
                    });
                }
                if let Some(&c) = f.iter().find(|&&c| c >= p) {
                    return Err(Error::BadModulus(format!("coefficient {c} is not below {p}")));
                }
                if f[m as usize] != 1 {
                    return Err(Error::BadModulus("modulus must be monic".into()));
                }
                if m > 1 && !is_irreducible(f, p) {
                    return Err(Error::ReducibleModulus);
                }
                f.to_vec()
            }
        };
        Ok(Field(Arc::new(Tables::build(p, m, q, modulus))))
    }

    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, None)
    }

    /// GF(q) with its default modulus.
    pub fn with_order(q: u32) -> Result<Field> {
        let (p, m) = prime_power(q as u64)
            .ok_or_else(|| Error::InadmissibleParameters(format!("{q} is not a prime power")))?;
        Field::new(p, m, None)
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Field> {
        Field::new(spec.p, spec.m, Some(&spec.modulus))
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec { p: self.p(), m: self.m(), modulus: self.modulus().to_vec() }
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }
    pub fn m(&self) -> u32 {
        self.0.m
    }
    pub fn q(&self) -> u32 {
        self.0.q
    }
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.0.add[a as usize * self.0.q as usize + b as usize]
    }
    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }
    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.0.neg[a as usize]
    }
    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.0.mul[a as usize * self.0.q as usize + b as usize]
    }
    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        (a != 0).then(|| self.0.inv[a as usize])
    }
    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        self.inv(b).map(|ib| self.mul(a, ib)).ok_or(Error::DivisionByZero)
    }
    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc: Elem = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The image of an integer under Z -> GF(p) -> GF(q).
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.p() as i64) as Elem
    }

    pub fn check(&self, index: u64) -> Result<Elem> {
        if index < self.q() as u64 {
            Ok(index as Elem)
        } else {
            Err(Error::ElementOutOfRange { index, q: self.q() })
        }
    }

    pub fn element(&self, index: u64) -> Result<FieldElement> {
        Ok(FieldElement { field: self.clone(), index: self.check(index)? })
    }

    /// All elements in canonical index order.
    pub fn elements(&self) -> Vec<FieldElement> {
        (0..self.q())
            .map(|i| FieldElement { field: self.clone(), index: i as Elem })
            .collect()
    }

    /// Polynomial coefficients (c_0, ..., c_{m-1}) of an element.
    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        digits(a as u32, self.p(), self.m())
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.m() as usize || coeffs.iter().any(|&c| c >= self.p()) {
            return Err(Error::BadModulus(format!("{coeffs:?} is not an element of GF({})", self.q())));
        }
        Ok(coeffs.iter().rev().fold(0u32, |acc, &c| acc * self.p() + c) as Elem)
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Elem) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    /// The primitive element with the smallest canonical index.
    pub fn primitive_element(&self) -> Elem {
        (1..self.q())
            .map(|i| i as Elem)
            .find(|&a| self.order(a) == Some(self.q() - 1))
            .expect("the multiplicative group of a finite field is cyclic")
    }

    /// A primitive r-th root of unity, taken as g^((q-1)/r) for the primitive
    /// element g of smallest index. In GF(5), GF(7) and GF(13) this is also the
    /// smallest-index root; in GF(9) with modulus x^2+1 it gives 2α.
    pub fn root_of_unity(&self, r: u32) -> Result<Elem> {
        let q = self.q();
        if r == 0 || !(q - 1).is_multiple_of(r) {
            return Err(Error::NoSuchRoot { r, q });
        }
        Ok(self.pow(self.primitive_element(), ((q - 1) / r) as u64))
    }

    /// Formats an element as a polynomial in α (or an integer for prime fields).
    pub fn format(&self, a: Elem) -> String {
        if self.m() == 1 {
            return a.to_string();
        }
        let terms: Vec<String> = self
            .coeffs(a)
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "α".to_string(),
                (1, c) => format!("{c}α"),
                (i, 1) => format!("α^{i}"),
                (i, c) => format!("{c}α^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

impl Tables {
    fn build(p: u32, m: u32, q: u32, modulus: Vec<u32>) -> Tables {
        let qs = q as usize;
        let coeffs: Vec<Vec<u32>> = (0..q).map(|i| digits(i, p, m)).collect();
        let index = |c: &[u32]| c.iter().rev().fold(0u32, |acc, &d| acc * p + d) as Elem;
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        for a in 0..qs {
            for b in 0..qs {
                let s: Vec<u32> = (0..m as usize).map(|i| (coeffs[a][i] + coeffs[b][i]) % p).collect();
                add[a * qs + b] = index(&s);
                let mut prod = vec![0u32; 2 * m as usize - 1];
                for (i, &x) in coeffs[a].iter().enumerate() {
                    for (j, &y) in coeffs[b].iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut r = if m == 1 { prod } else { poly_rem(&prod, &modulus, p) };
                r.resize(m as usize, 0);
                mul[a * qs + b] = index(&r);
            }
        }
        let neg = (0..qs).map(|a| (0..qs).find(|&b| add[a * qs + b] == 0).unwrap() as Elem).collect();
        let inv = (0..qs)
            .map(|a| if a == 0 { 0 } else { (1..qs).find(|&b| mul[a * qs + b] == 1).unwrap() as Elem })
            .collect();
        Tables { p, m, q, modulus, add, mul, neg, inv }
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Field) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})[modulus={:?}]", self.q(), self.modulus())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q())
    }
}

/// A field element bound to its field, with checked arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    index: Elem,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn index(&self) -> Elem {
        self.index
    }
    pub fn is_zero(&self) -> bool {
        self.index == 0
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }
    fn wrap(&self, index: Elem) -> FieldElement {
        FieldElement { field: self.field.clone(), index }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.add(self.index, other.index)))
    }
    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.sub(self.index, other.index)))
    }
    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.mul(self.index, other.index)))
    }
    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.div(self.index, other.index)?))
    }
    pub fn neg(&self) -> FieldElement {
        self.wrap(self.field.neg(self.index))
    }
    pub fn inv(&self) -> Result<FieldElement> {
        self.field.inv(self.index).map(|i| self.wrap(i)).ok_or(Error::DivisionByZero)
    }
    pub fn pow(&self, e: u64) -> FieldElement {
        self.wrap(self.field.pow(self.index, e))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}∈{}", self.field.format(self.index), self.field)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format(self.index))
    }
}
