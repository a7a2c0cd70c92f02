//! Finite groups as explicit multiplication tables over dense element ids.
//!
//! Base groups carry a full Cayley table. Direct products are represented
//! lazily by their two factors: the element `(a, b)` has id `a * |B| + b` and
//! multiplication is computed componentwise, so products of products never
//! materialize a table.

mod hom;
mod perm;
mod subgroup;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use crate::arith::lcm;
use crate::error::{Error, Result};

pub use hom::GroupHom;
pub use perm::Permutation;
pub use subgroup::{ConjugacyClasses, Subgroup};

pub type Elem = u32;

/// Default cap on the order of a group produced by closure.
pub const DEFAULT_ORDER_CAP: usize = 10080;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// Structural identity of a group. Products of the same factors compare equal
/// even when built independently.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupKey {
    Base(u64),
    Product(Arc<GroupKey>, Arc<GroupKey>),
}

enum Repr {
    Table { mul: Vec<Elem>, inv: Vec<Elem> },
    Product { left: Arc<FiniteGroup>, right: Arc<FiniteGroup> },
}

struct PermLabels {
    perms: Vec<Permutation>,
    index: HashMap<Permutation, Elem>,
}

pub struct FiniteGroup {
    name: String,
    order: usize,
    identity: Elem,
    repr: Repr,
    key: GroupKey,
    labels: Option<PermLabels>,
    exponent: OnceLock<u64>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

fn fresh_key() -> GroupKey {
    GroupKey::Base(NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed))
}

impl FiniteGroup {
    /// Closure of a list of permutations, as a Cayley table.
    ///
    /// Element 0 is the identity; the remaining ids follow breadth-first
    /// discovery order with generators applied in the given order.
    pub fn from_permutations(name: &str, generators: &[Permutation], cap: usize) -> Result<Arc<Self>> {
        let gens: Vec<Permutation> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut perms = vec![Permutation::identity()];
        let mut index: HashMap<Permutation, Elem> = HashMap::new();
        index.insert(Permutation::identity(), 0);
        // parent[i] = (generator index, element) with perms[i] = gens[g] * perms[element]
        let mut parent: Vec<Option<(usize, usize)>> = vec![None];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (gi, g) in gens.iter().enumerate() {
                let p = g.compose(&perms[i]);
                if !index.contains_key(&p) {
                    if perms.len() >= cap {
                        return Err(Error::SizeLimit {
                            what: format!("closure of {name}"),
                            size: perms.len() + 1,
                            cap,
                        });
                    }
                    index.insert(p.clone(), perms.len() as Elem);
                    perms.push(p);
                    parent.push(Some((gi, i)));
                    queue.push_back(perms.len() - 1);
                }
            }
        }
        let n = perms.len();
        // Left-regular images of the generators, then of all elements along the BFS tree.
        let gen_rows: Vec<Vec<Elem>> = gens
            .iter()
            .map(|g| perms.iter().map(|x| index[&g.compose(x)]).collect())
            .collect();
        let mut mul = vec![0 as Elem; n * n];
        for x in 0..n {
            mul[x] = x as Elem;
        }
        for i in 1..n {
            let (gi, j) = parent[i].expect("non-identity element has a parent");
            for x in 0..n {
                let jx = mul[j * n + x] as usize;
                mul[i * n + x] = gen_rows[gi][jx];
            }
        }
        let mut inv = vec![0 as Elem; n];
        for a in 0..n {
            for b in 0..n {
                if mul[a * n + b] == 0 {
                    inv[a] = b as Elem;
                    break;
                }
            }
        }
        Ok(Arc::new(FiniteGroup {
            name: name.to_string(),
            order: n,
            identity: 0,
            repr: Repr::Table { mul, inv },
            key: fresh_key(),
            labels: Some(PermLabels { perms, index }),
            exponent: OnceLock::new(),
        }))
    }

    /// A group given by an explicit Cayley table `table[a][b] = a * b`.
    pub fn from_table(name: &str, table: &[Vec<usize>]) -> Result<Arc<Self>> {
        let n = table.len();
        if n == 0 {
            return Err(Error::GroupTable("empty table".into()));
        }
        let mut mul = Vec::with_capacity(n * n);
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::GroupTable(format!("row {a} has length {} (expected {n})", row.len())));
            }
            for &v in row {
                if v >= n {
                    return Err(Error::GroupTable(format!("entry {v} out of range in row {a}")));
                }
                mul.push(v as Elem);
            }
        }
        Self::from_mul_table(name, n, mul)
    }

    pub(crate) fn from_mul_table(name: &str, n: usize, mul: Vec<Elem>) -> Result<Arc<Self>> {
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul[e * n + x] as usize == x && mul[x * n + e] as usize == x))
            .ok_or_else(|| Error::GroupTable("no two-sided identity".into()))?;
        let mut inv = vec![0 as Elem; n];
        for a in 0..n {
            let b = (0..n)
                .find(|&b| mul[a * n + b] as usize == identity && mul[b * n + a] as usize == identity)
                .ok_or_else(|| Error::GroupTable(format!("element {a} has no inverse")))?;
            inv[a] = b as Elem;
        }
        let g = FiniteGroup {
            name: name.to_string(),
            order: n,
            identity: identity as Elem,
            repr: Repr::Table { mul, inv },
            key: fresh_key(),
            labels: None,
            exponent: OnceLock::new(),
        };
        g.check_axioms()?;
        Ok(Arc::new(g))
    }

    /// Unvalidated table constructor for groups derived from valid groups.
    pub(crate) fn from_trusted_table(name: &str, n: usize, mul: Vec<Elem>) -> Arc<Self> {
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul[e * n + x] as usize == x))
            .expect("table has an identity") as Elem;
        let mut inv = vec![0 as Elem; n];
        for a in 0..n {
            for b in 0..n {
                if mul[a * n + b] == identity {
                    inv[a] = b as Elem;
                    break;
                }
            }
        }
        Arc::new(FiniteGroup {
            name: name.to_string(),
            order: n,
            identity,
            repr: Repr::Table { mul, inv },
            key: fresh_key(),
            labels: None,
            exponent: OnceLock::new(),
        })
    }

    /// The direct product `a x b`; element `(x, y)` has id `x * |b| + y`.
    pub fn product(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup {
            name: format!("{}x{}", a.name, b.name),
            order: a.order * b.order,
            identity: a.identity * b.order as Elem + b.identity,
            repr: Repr::Product { left: a.clone(), right: b.clone() },
            key: GroupKey::Product(Arc::new(a.key.clone()), Arc::new(b.key.clone())),
            labels: None,
            exponent: OnceLock::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn key(&self) -> &GroupKey {
        &self.key
    }

    pub fn same_as(&self, other: &FiniteGroup) -> bool {
        self.key == other.key
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order as Elem
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.repr {
            Repr::Table { mul, .. } => mul[a as usize * self.order + b as usize],
            Repr::Product { left, right } => {
                let m = right.order as Elem;
                let (a1, a2) = (a / m, a % m);
                let (b1, b2) = (b / m, b % m);
                left.mul(a1, b1) * m + right.mul(a2, b2)
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        match &self.repr {
            Repr::Table { inv, .. } => inv[a as usize],
            Repr::Product { left, right } => {
                let m = right.order as Elem;
                left.inv(a / m) * m + right.inv(a % m)
            }
        }
    }

    /// `g x g^-1`.
    #[inline]
    pub fn conj(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let mut base = a;
        let mut acc = self.identity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: Elem) -> u64 {
        match &self.repr {
            Repr::Product { left, right } => {
                let m = right.order as Elem;
                lcm(left.element_order(a / m), right.element_order(a % m))
            }
            Repr::Table { .. } => {
                let mut x = a;
                let mut k = 1;
                while x != self.identity {
                    x = self.mul(x, a);
                    k += 1;
                }
                k
            }
        }
    }

    pub fn exponent(&self) -> u64 {
        *self.exponent.get_or_init(|| match &self.repr {
            Repr::Product { left, right } => lcm(left.exponent(), right.exponent()),
            Repr::Table { .. } => self.elements().map(|g| self.element_order(g)).fold(1, lcm),
        })
    }

    /// True iff the order of `g` is prime to `p`.
    pub fn is_p_prime_element(&self, g: Elem, p: u64) -> bool {
        self.element_order(g) % p != 0
    }

    pub fn factors(&self) -> Option<(&Arc<FiniteGroup>, &Arc<FiniteGroup>)> {
        match &self.repr {
            Repr::Product { left, right } => Some((left, right)),
            Repr::Table { .. } => None,
        }
    }

    /// Id of the pair `(a, b)` in a product group.
    #[inline]
    pub fn pair(&self, a: Elem, b: Elem) -> Elem {
        match &self.repr {
            Repr::Product { right, .. } => a * right.order as Elem + b,
            Repr::Table { .. } => panic!("pair() on non-product group {}", self.name),
        }
    }

    /// Components of an element of a product group.
    #[inline]
    pub fn split(&self, e: Elem) -> (Elem, Elem) {
        match &self.repr {
            Repr::Product { right, .. } => {
                let m = right.order as Elem;
                (e / m, e % m)
            }
            Repr::Table { .. } => panic!("split() on non-product group {}", self.name),
        }
    }

    pub fn permutation(&self, e: Elem) -> Option<&Permutation> {
        self.labels.as_ref().map(|l| &l.perms[e as usize])
    }

    pub fn find_permutation(&self, p: &Permutation) -> Option<Elem> {
        self.labels.as_ref().and_then(|l| l.index.get(p).copied())
    }

    /// Human-readable label of an element.
    pub fn label(&self, e: Elem) -> String {
        if let Some(p) = self.permutation(e) {
            return p.to_string();
        }
        match &self.repr {
            Repr::Product { left, right } => {
                let m = right.order as Elem;
                format!("[{}, {}]", left.label(e / m), right.label(e % m))
            }
            Repr::Table { .. } => format!("g{e}"),
        }
    }

    /// Checks identity, inverse and associativity laws. Associativity is
    /// exhaustive for order <= 64 and sampled on a fixed pseudo-random set of
    /// triples above that.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.order as Elem;
        for a in 0..n {
            if self.mul(a, self.identity) != a || self.mul(self.identity, a) != a {
                return Err(Error::GroupTable(format!("identity law fails at {a}")));
            }
            let b = self.inv(a);
            if self.mul(a, b) != self.identity || self.mul(b, a) != self.identity {
                return Err(Error::GroupTable(format!("inverse law fails at {a}")));
            }
        }
        let assoc = |a: Elem, b: Elem, c: Elem| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c));
        if self.order <= 64 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(Error::GroupTable(format!("associativity fails at ({a},{b},{c})")));
                        }
                    }
                }
            }
        } else {
            let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % n as u64) as Elem
            };
            for _ in 0..20_000 {
                let (a, b, c) = (next(), next(), next());
                if !assoc(a, b, c) {
                    return Err(Error::GroupTable(format!("associativity fails at ({a},{b},{c})")));
                }
            }
        }
        Ok(())
    }
}

/// The direct product together with its structure maps.
pub struct DirectProduct {
    pub group: Arc<FiniteGroup>,
    pub embed_left: GroupHom,
    pub embed_right: GroupHom,
    pub project_left: GroupHom,
    pub project_right: GroupHom,
}

pub fn direct_product(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> DirectProduct {
    let group = FiniteGroup::product(a, b);
    let full = Subgroup::full(&group);
    let fa = Subgroup::full(a);
    let fb = Subgroup::full(b);
    let (ea, eb) = (a.identity(), b.identity());
    let embed_left = GroupHom::from_images_unchecked(&fa, &full, a.elements().map(|x| group.pair(x, eb)).collect());
    let embed_right = GroupHom::from_images_unchecked(&fb, &full, b.elements().map(|y| group.pair(ea, y)).collect());
    let project_left = GroupHom::from_images_unchecked(&full, &fa, group.elements().map(|z| group.split(z).0).collect());
    let project_right = GroupHom::from_images_unchecked(&full, &fb, group.elements().map(|z| group.split(z).1).collect());
    DirectProduct { group, embed_left, embed_right, project_left, project_right }
}

/// Parses generators and closes them into a group.
pub fn group_from_cycle_strings(name: &str, generators: &[&str]) -> Result<Arc<FiniteGroup>> {
    let gens = generators
        .iter()
        .map(|s| Permutation::parse_cycles(s))
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::from_permutations(name, &gens, DEFAULT_ORDER_CAP)
}

/// Cyclic group of order `n` generated by the `n`-cycle `(1,..,n)`.
pub fn cyclic(n: usize) -> Arc<FiniteGroup> {
    let images: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    let gens = if n <= 1 { vec![] } else { vec![Permutation::from_images(images).expect("n-cycle")] };
    FiniteGroup::from_permutations(&format!("C{n}"), &gens, DEFAULT_ORDER_CAP).expect("cyclic group")
}

/// Symmetric group on `n` points.
pub fn symmetric(n: usize) -> Arc<FiniteGroup> {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_images((0..n as u32).map(|i| if i < 2 { 1 - i } else { i }).collect()).unwrap());
    }
    if n >= 3 {
        gens.push(Permutation::from_images((0..n as u32).map(|i| (i + 1) % n as u32).collect()).unwrap());
    }
    FiniteGroup::from_permutations(&format!("S{n}"), &gens, DEFAULT_ORDER_CAP).expect("symmetric group")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_orders() {
        assert_eq!(group_from_cycle_strings("C2", &["(1,2)"]).unwrap().order(), 2);
        assert_eq!(group_from_cycle_strings("S3", &["(1,2)", "(1,2,3)"]).unwrap().order(), 6);
        let triv = FiniteGroup::from_permutations("C1", &[], DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(triv.order(), 1);
        assert_eq!(symmetric(4).order(), 24);
    }

    #[test]
    fn closure_respects_cap() {
        let gens = ["(1,2)", "(1,2,3,4,5)"].map(|s| Permutation::parse_cycles(s).unwrap());
        let err = FiniteGroup::from_permutations("S5", &gens, 100).unwrap_err();
        assert!(matches!(err, Error::SizeLimit { cap: 100, .. }));
    }

    #[test]
    fn table_multiplication_matches_permutations() {
        let g = symmetric(3);
        for a in g.elements() {
            for b in g.elements() {
                let pa = g.permutation(a).unwrap();
                let pb = g.permutation(b).unwrap();
                assert_eq!(g.permutation(g.mul(a, b)).unwrap(), &pa.compose(pb));
            }
        }
        g.check_axioms().unwrap();
    }

    #[test]
    fn product_of_c2_c3_is_cyclic_of_order_6() {
        let dp = direct_product(&cyclic(2), &cyclic(3));
        assert_eq!(dp.group.order(), 6);
        assert!(dp.group.elements().any(|g| dp.group.element_order(g) == 6));
        dp.group.check_axioms().unwrap();
    }

    #[test]
    fn product_with_trivial_group() {
        let h = symmetric(3);
        let dp = direct_product(&cyclic(1), &h);
        assert_eq!(dp.group.order(), 6);
        for z in dp.group.elements() {
            for w in dp.group.elements() {
                let (_, a) = dp.group.split(z);
                let (_, b) = dp.group.split(w);
                assert_eq!(dp.group.split(dp.group.mul(z, w)).1, h.mul(a, b));
            }
        }
    }

    #[test]
    fn s3_squared_projection_after_embedding_is_identity() {
        let s3 = symmetric(3);
        let dp = direct_product(&s3, &s3);
        assert_eq!(dp.group.order(), 36);
        for g in s3.elements() {
            assert_eq!(dp.project_left.apply(dp.embed_left.apply(g)), g);
            assert_eq!(dp.project_right.apply(dp.embed_right.apply(g)), g);
        }
        dp.embed_left.check().unwrap();
        dp.project_right.check().unwrap();
    }

    #[test]
    fn table_validation() {
        let c2 = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(FiniteGroup::from_table("C2", &c2).unwrap().order(), 2);
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteGroup::from_table("bad", &bad).is_err());
        // a loop that is not associative: quasigroup of order 5 with identity
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(FiniteGroup::from_table("loop", &loop5).is_err());
    }

    #[test]
    fn p_prime_elements() {
        let s3 = symmetric(3);
        let t = s3.find_permutation(&"(1,2)".parse().unwrap()).unwrap();
        let c = s3.find_permutation(&"(1,2,3)".parse().unwrap()).unwrap();
        assert!(s3.is_p_prime_element(s3.identity(), 2));
        assert!(!s3.is_p_prime_element(t, 2));
        assert!(s3.is_p_prime_element(c, 2));
        assert_eq!(s3.exponent(), 6);
    }
}
