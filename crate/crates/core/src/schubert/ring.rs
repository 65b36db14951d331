use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::lr::lr_coefficient;
use crate::error::{Error, Result};
use crate::exact::{choose, partitions_in_box, Partition};

type Product = Arc<Vec<(usize, u64)>>;

/// Cohomology ring of the Grassmannian `G(r, n)` of `r`-planes in `P^n`,
/// with the Schubert basis indexed by partitions in the `(r+1) x (n-r)` box.
///
/// Littlewood-Richardson products of basis elements are computed on first use
/// and cached; the cache is safe to share across threads.
pub struct GrassmannRing {
    r: usize,
    n: usize,
    basis: Vec<Partition>,
    index: HashMap<Partition, usize>,
    products: RwLock<HashMap<(usize, usize), Product>>,
}

impl fmt::Debug for GrassmannRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.r, self.n)
    }
}

impl GrassmannRing {
    pub fn new(r: usize, n: usize) -> Result<Arc<Self>> {
        if r >= n {
            return Err(Error::InvalidInput(format!(
                "plane dimension {r} must be below ambient dimension {n}"
            )));
        }
        let basis = partitions_in_box(r + 1, n - r);
        let index = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        Ok(Arc::new(Self {
            r,
            n,
            basis,
            index,
            products: RwLock::new(HashMap::new()),
        }))
    }

    pub fn plane_dim(&self) -> usize {
        self.r
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    /// Rows of the box, `r + 1`; also the rank of the tautological subbundle.
    pub fn rows(&self) -> usize {
        self.r + 1
    }

    /// Columns of the box, `n - r`; also the rank of the universal quotient.
    pub fn cols(&self) -> usize {
        self.n - self.r
    }

    pub fn dim(&self) -> usize {
        self.rows() * self.cols()
    }

    pub fn rank(&self) -> usize {
        debug_assert_eq!(self.basis.len(), choose(self.n + 1, self.r + 1));
        self.basis.len()
    }

    pub fn basis(&self) -> &[Partition] {
        &self.basis
    }

    pub fn top_partition(&self) -> Partition {
        Partition::rectangle(self.rows(), self.cols())
    }

    fn same_as(&self, other: &GrassmannRing) -> bool {
        self.r == other.r && self.n == other.n
    }

    fn product(&self, i: usize, j: usize) -> Product {
        let key = if i <= j { (i, j) } else { (j, i) };
        if let Some(p) = self.products.read().expect("cache poisoned").get(&key) {
            return Arc::clone(p);
        }
        let (lambda, mu) = (&self.basis[key.0], &self.basis[key.1]);
        let size = lambda.size() + mu.size();
        let terms: Vec<(usize, u64)> = self
            .basis
            .iter()
            .enumerate()
            .filter(|(_, nu)| nu.size() == size && nu.contains(lambda) && nu.contains(mu))
            .filter_map(|(k, nu)| {
                let c = lr_coefficient(lambda, mu, nu);
                (c > 0).then_some((k, c))
            })
            .collect();
        let terms = Arc::new(terms);
        self.products
            .write()
            .expect("cache poisoned")
            .entry(key)
            .or_insert_with(|| Arc::clone(&terms));
        terms
    }
}

/// An integral combination of Schubert classes. Zero coefficients are never
/// stored.
#[derive(Clone)]
pub struct GrassmannClass {
    ring: Arc<GrassmannRing>,
    coeffs: BTreeMap<usize, BigInt>,
}

impl GrassmannClass {
    pub fn zero(ring: &Arc<GrassmannRing>) -> GrassmannClass {
        GrassmannClass {
            ring: Arc::clone(ring),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<GrassmannRing>) -> GrassmannClass {
        Self::sigma(ring, &Partition::empty()).expect("empty partition fits")
    }

    /// Schubert class `sigma_lambda`.
    pub fn sigma(ring: &Arc<GrassmannRing>, lambda: &Partition) -> Result<GrassmannClass> {
        let idx = *ring.index.get(lambda).ok_or_else(|| {
            Error::InvalidInput(format!(
                "partition {lambda} does not fit the {}x{} box",
                ring.rows(),
                ring.cols()
            ))
        })?;
        let mut coeffs = BTreeMap::new();
        coeffs.insert(idx, BigInt::one());
        Ok(GrassmannClass {
            ring: Arc::clone(ring),
            coeffs,
        })
    }

    /// `sigma_k`, zero when `k` exceeds the box width.
    pub fn special(ring: &Arc<GrassmannRing>, k: usize) -> GrassmannClass {
        Self::sigma(ring, &Partition::new(vec![k])).unwrap_or_else(|_| Self::zero(ring))
    }

    /// `sigma_{1^k}`, zero when `k` exceeds the box height.
    pub fn special_column(ring: &Arc<GrassmannRing>, k: usize) -> GrassmannClass {
        Self::sigma(ring, &Partition::new(vec![1; k])).unwrap_or_else(|_| Self::zero(ring))
    }

    pub fn ring(&self) -> &Arc<GrassmannRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.ring
            .index
            .get(lambda)
            .and_then(|i| self.coeffs.get(i))
            .cloned()
            .unwrap_or_default()
    }

    /// Coefficient of the point class, i.e. the degree of the class.
    pub fn degree(&self) -> BigInt {
        self.coefficient(&self.ring.top_partition())
    }

    /// `(partition, coefficient)` pairs in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter().map(|(&i, c)| (&self.ring.basis[i], c))
    }

    /// The part of codimension `k`.
    pub fn homogeneous_part(&self, k: usize) -> GrassmannClass {
        GrassmannClass {
            ring: Arc::clone(&self.ring),
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&i, _)| self.ring.basis[i].size() == k)
                .map(|(&i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous_of(&self, k: usize) -> bool {
        self.coeffs.keys().all(|&i| self.ring.basis[i].size() == k)
    }

    fn check_ring(&self, other: &GrassmannClass) -> Result<()> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn add_term(&mut self, idx: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(idx).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&idx);
        }
    }

    pub fn add(&self, other: &GrassmannClass) -> Result<GrassmannClass> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (&i, c) in &other.coeffs {
            out.add_term(i, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &GrassmannClass) -> Result<GrassmannClass> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> GrassmannClass {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        GrassmannClass {
            ring: Arc::clone(&self.ring),
            coeffs: self.coeffs.iter().map(|(&i, x)| (i, x * c)).collect(),
        }
    }

    /// Littlewood-Richardson product; classes beyond the box vanish.
    pub fn mul(&self, other: &GrassmannClass) -> Result<GrassmannClass> {
        self.check_ring(other)?;
        let mut out = Self::zero(&self.ring);
        let top = self.ring.dim();
        for (&i, a) in &self.coeffs {
            let di = self.ring.basis[i].size();
            for (&j, b) in &other.coeffs {
                if di + self.ring.basis[j].size() > top {
                    continue;
                }
                let ab = a * b;
                for &(k, c) in self.ring.product(i, j).iter() {
                    out.add_term(k, &ab * c);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> GrassmannClass {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }
}

impl PartialEq for GrassmannClass {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.coeffs == other.coeffs
    }
}

impl Eq for GrassmannClass {}

impl fmt::Debug for GrassmannClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{self}]", self.ring)
    }
}

impl fmt::Display for GrassmannClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (lambda, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "s{lambda}")?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct Term<'a> {
    partition: &'a Partition,
    #[serde(serialize_with = "serialize_bigint")]
    coefficient: &'a BigInt,
}

/// Integers that fit in `i64` are emitted as JSON numbers, larger ones as
/// decimal strings.
pub fn serialize_bigint<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

impl Serialize for GrassmannClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for (partition, coefficient) in self.terms() {
            seq.serialize_element(&Term {
                partition,
                coefficient,
            })?;
        }
        seq.end()
    }
}
