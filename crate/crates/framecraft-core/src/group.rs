//! Finite group arithmetic on Cayley tables: construction and validation,
//! builtin families, subgroup embeddings, right-coset decompositions with a
//! deterministic cross section, and group actions.

use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::sync::Arc;

/// Orders up to this bound get exhaustive associativity checking; larger
/// tables are sampled instead (SAMPLED_TRIPLES triples, fixed seed).
const EXHAUSTIVE_ASSOC_BOUND: usize = 512;
const SAMPLED_TRIPLES: usize = 100_000;
const ASSOC_SAMPLE_SEED: u64 = 0;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    mult: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mult == other.mult
    }
}
impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Validate a Cayley table: Latin square, two-sided identity, two-sided
    /// inverses, associativity.
    pub fn from_mult_table(mult: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_mult_table_seeded(mult, ASSOC_SAMPLE_SEED)
    }

    /// Same as [`from_mult_table`](Self::from_mult_table), with the seed of
    /// the sampled associativity check (used above order
    /// `EXHAUSTIVE_ASSOC_BOUND`) chosen by the caller.
    pub fn from_mult_table_seeded(mult: Vec<Vec<usize>>, seed: u64) -> Result<Self> {
        let n = mult.len();
        if n == 0 {
            return Err(Error::NotAGroup {
                reason: "empty table".into(),
                witness: None,
            });
        }
        for (i, row) in mult.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup {
                    reason: format!("row {i} has length {} in a table of order {n}", row.len()),
                    witness: None,
                });
            }
            for (&e, j) in row.iter().zip(0..) {
                if e >= n {
                    return Err(Error::NotAGroup {
                        reason: format!("entry [{i}][{j}] = {e} out of range"),
                        witness: None,
                    });
                }
            }
        }
        // Latin square: rows and columns are permutations.
        for i in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for j in 0..n {
                if std::mem::replace(&mut seen_row[mult[i][j]], true) {
                    return Err(Error::NotAGroup {
                        reason: format!("row {i} repeats element {}", mult[i][j]),
                        witness: None,
                    });
                }
                if std::mem::replace(&mut seen_col[mult[j][i]], true) {
                    return Err(Error::NotAGroup {
                        reason: format!("column {i} repeats element {}", mult[j][i]),
                        witness: None,
                    });
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mult[e][x] == x && mult[x][e] == x))
            .ok_or_else(|| Error::NotAGroup {
                reason: "no two-sided identity".into(),
                witness: None,
            })?;
        let mut inverse = vec![0usize; n];
        for x in 0..n {
            let y = (0..n)
                .find(|&y| mult[x][y] == identity && mult[y][x] == identity)
                .ok_or_else(|| Error::NotAGroup {
                    reason: format!("element {x} has no two-sided inverse"),
                    witness: None,
                })?;
            inverse[x] = y;
        }
        let assoc_fail = if n <= EXHAUSTIVE_ASSOC_BOUND {
            let mut fail = None;
            'outer: for a in 0..n {
                for b in 0..n {
                    let ab = mult[a][b];
                    for c_ in 0..n {
                        if mult[ab][c_] != mult[a][mult[b][c_]] {
                            fail = Some((a, b, c_));
                            break 'outer;
                        }
                    }
                }
            }
            fail
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut fail = None;
            for _ in 0..SAMPLED_TRIPLES {
                let (a, b, c_) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if mult[mult[a][b]][c_] != mult[a][mult[b][c_]] {
                    fail = Some((a, b, c_));
                    break;
                }
            }
            fail
        };
        if let Some((a, b, c_)) = assoc_fail {
            return Err(Error::NotAGroup {
                reason: format!("associativity fails at ({a}·{b})·{c_} ≠ {a}·({b}·{c_})"),
                witness: Some((a, b, c_)),
            });
        }
        Ok(FiniteGroup {
            order: n,
            mult,
            identity,
            inverse,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::SizeMismatch(format!(
                "{} labels for a group of order {}",
                labels.len(),
                self.order
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mult_table(&self) -> &Vec<Vec<usize>> {
        &self.mult
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("g{i}"),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.order).map(|i| self.label(i)).collect()
    }

    /// Conjugacy class of x as a sorted list.
    pub fn conjugacy_class(&self, x: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = self
            .elements()
            .map(|g| self.mul(self.mul(g, x), self.inv(g)))
            .collect();
        set.into_iter().collect()
    }

    // ---- builtin families ----

    pub fn cyclic(n: usize) -> Result<Arc<FiniteGroup>> {
        if n == 0 {
            return Err(Error::UnsupportedGroup("cyclic:0".into()));
        }
        let mult = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let labels = (0..n).map(|i| format!("r{i}")).collect();
        Ok(Arc::new(FiniteGroup::from_mult_table(mult)?.with_labels(labels)?))
    }

    /// Dihedral group of order 2n, on ⟨a, b : aⁿ = b² = e, b a b⁻¹ = a⁻¹⟩.
    /// Element aⁱ sits at index i, aⁱb at index n + i.
    pub fn dihedral(n: usize) -> Result<Arc<FiniteGroup>> {
        if n == 0 {
            return Err(Error::UnsupportedGroup("dihedral:0".into()));
        }
        let idx = |i: usize, flip: bool| if flip { n + i } else { i };
        let mut mult = vec![vec![0usize; 2 * n]; 2 * n];
        for i in 0..n {
            for j in 0..n {
                // aⁱ·aʲ = aⁱ⁺ʲ, aⁱ·aʲb = aⁱ⁺ʲb, aⁱb·aʲ = aⁱ⁻ʲb, aⁱb·aʲb = aⁱ⁻ʲ
                mult[idx(i, false)][idx(j, false)] = idx((i + j) % n, false);
                mult[idx(i, false)][idx(j, true)] = idx((i + j) % n, true);
                mult[idx(i, true)][idx(j, false)] = idx((i + n - j) % n, true);
                mult[idx(i, true)][idx(j, true)] = idx((i + n - j) % n, false);
            }
        }
        let mut labels = Vec::with_capacity(2 * n);
        for i in 0..n {
            labels.push(match i {
                0 => "e".to_string(),
                1 => "a".to_string(),
                _ => format!("a^{i}"),
            });
        }
        for i in 0..n {
            labels.push(match i {
                0 => "b".to_string(),
                1 => "ab".to_string(),
                _ => format!("a^{i}b"),
            });
        }
        Ok(Arc::new(FiniteGroup::from_mult_table(mult)?.with_labels(labels)?))
    }

    /// Symmetric group on n points, elements in lexicographic one-line order,
    /// with (σ·τ)(x) = σ(τ(x)).
    pub fn symmetric(n: usize) -> Result<Arc<FiniteGroup>> {
        if n == 0 || n > 8 {
            return Err(Error::UnsupportedGroup(format!("symmetric:{n}")));
        }
        let perms = all_permutations(n);
        let order = perms.len();
        let index_of = |p: &[usize]| -> usize {
            perms.binary_search_by(|q| q.as_slice().cmp(p)).expect("permutation present")
        };
        let mut mult = vec![vec![0usize; order]; order];
        for (s, ps) in perms.iter().enumerate() {
            for (t, pt) in perms.iter().enumerate() {
                let comp: Vec<usize> = (0..n).map(|x| ps[pt[x]]).collect();
                mult[s][t] = index_of(&comp);
            }
        }
        let labels = perms
            .iter()
            .map(|p| {
                let body: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                format!("[{}]", body.join(" "))
            })
            .collect();
        Ok(Arc::new(FiniteGroup::from_mult_table(mult)?.with_labels(labels)?))
    }

    /// Direct product with (i, j) ↦ i·|H| + j.
    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> Result<Arc<FiniteGroup>> {
        let (ng, nh) = (g.order(), h.order());
        let n = ng * nh;
        let mut mult = vec![vec![0usize; n]; n];
        for i1 in 0..ng {
            for j1 in 0..nh {
                for i2 in 0..ng {
                    for j2 in 0..nh {
                        mult[i1 * nh + j1][i2 * nh + j2] = g.mul(i1, i2) * nh + h.mul(j1, j2);
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(n);
        for i in 0..ng {
            for j in 0..nh {
                labels.push(format!("{}|{}", g.label(i), h.label(j)));
            }
        }
        Ok(Arc::new(FiniteGroup::from_mult_table(mult)?.with_labels(labels)?))
    }
}

/// All permutations of 0..n in lexicographic one-line order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Structured group spec: `cyclic:n`, `dihedral:n`, `symmetric:n` (n ≤ 5),
/// `product:<spec>x<spec>`.
#[derive(Clone, Debug, PartialEq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn parse(s: &str) -> Result<GroupSpec> {
        let bad = || Error::UnsupportedGroup(s.to_string());
        if let Some(rest) = s.strip_prefix("product:") {
            // split at each 'x' until both halves parse
            for (pos, _) in rest.match_indices('x') {
                let (left, right) = (&rest[..pos], &rest[pos + 1..]);
                if let (Ok(l), Ok(r)) = (GroupSpec::parse(left), GroupSpec::parse(right)) {
                    return Ok(GroupSpec::Product(Box::new(l), Box::new(r)));
                }
            }
            return Err(bad());
        }
        let (family, arg) = s.split_once(':').ok_or_else(bad)?;
        let n: usize = arg.parse().map_err(|_| bad())?;
        match family {
            "cyclic" if n >= 1 => Ok(GroupSpec::Cyclic(n)),
            "dihedral" if n >= 1 => Ok(GroupSpec::Dihedral(n)),
            "symmetric" if (1..=5).contains(&n) => Ok(GroupSpec::Symmetric(n)),
            _ => Err(bad()),
        }
    }

    pub fn build(&self) -> Result<Arc<FiniteGroup>> {
        match self {
            GroupSpec::Cyclic(n) => FiniteGroup::cyclic(*n),
            GroupSpec::Dihedral(n) => FiniteGroup::dihedral(*n),
            GroupSpec::Symmetric(n) => FiniteGroup::symmetric(*n),
            GroupSpec::Product(l, r) => {
                let (lg, rg) = (l.build()?, r.build()?);
                FiniteGroup::product(&lg, &rg)
            }
        }
    }

    pub fn canonical_name(&self) -> String {
        match self {
            GroupSpec::Cyclic(n) => format!("cyclic:{n}"),
            GroupSpec::Dihedral(n) => format!("dihedral:{n}"),
            GroupSpec::Symmetric(n) => format!("symmetric:{n}"),
            GroupSpec::Product(l, r) => {
                format!("product:{}x{}", l.canonical_name(), r.canonical_name())
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct SubgroupEmbedding {
    parent: Arc<FiniteGroup>,
    member_indices: Vec<usize>,
    induced: Arc<FiniteGroup>,
    /// K-index → parent index (the sorted member list).
    parent_of: Vec<usize>,
    /// parent index → K-index, when the element belongs to K.
    k_index: Vec<Option<usize>>,
}

impl SubgroupEmbedding {
    pub fn new(parent: Arc<FiniteGroup>, members: &[usize]) -> Result<Self> {
        let n = parent.order();
        let set: BTreeSet<usize> = members.iter().copied().collect();
        if set.len() != members.len() {
            return Err(Error::NotASubgroup("duplicate member indices".into()));
        }
        if set.iter().any(|&m| m >= n) {
            return Err(Error::NotASubgroup("member index out of range".into()));
        }
        if !set.contains(&parent.identity()) {
            return Err(Error::NotASubgroup("missing the identity".into()));
        }
        for &x in &set {
            if !set.contains(&parent.inv(x)) {
                return Err(Error::NotASubgroup(format!("not closed under inverse at {x}")));
            }
            for &y in &set {
                if !set.contains(&parent.mul(x, y)) {
                    return Err(Error::NotASubgroup(format!(
                        "not closed under multiplication at {x}·{y}"
                    )));
                }
            }
        }
        if n % set.len() != 0 {
            return Err(Error::NotASubgroup(format!(
                "order {} does not divide parent order {n}",
                set.len()
            )));
        }
        let parent_of: Vec<usize> = set.iter().copied().collect();
        let mut k_index = vec![None; n];
        for (k, &p) in parent_of.iter().enumerate() {
            k_index[p] = Some(k);
        }
        let k = parent_of.len();
        let mut mult = vec![vec![0usize; k]; k];
        for i in 0..k {
            for j in 0..k {
                mult[i][j] = k_index[parent.mul(parent_of[i], parent_of[j])]
                    .expect("closure already checked");
            }
        }
        let labels = parent_of.iter().map(|&p| parent.label(p)).collect();
        let induced = Arc::new(FiniteGroup::from_mult_table(mult)?.with_labels(labels)?);
        Ok(SubgroupEmbedding {
            parent,
            member_indices: parent_of.clone(),
            induced,
            parent_of,
            k_index,
        })
    }

    /// Smallest subgroup containing the given generators.
    pub fn generated_by(parent: Arc<FiniteGroup>, generators: &[usize]) -> Result<Self> {
        let mut set = BTreeSet::new();
        set.insert(parent.identity());
        let mut frontier: Vec<usize> = vec![parent.identity()];
        while let Some(x) = frontier.pop() {
            for &g in generators {
                for y in [parent.mul(x, g), parent.mul(x, parent.inv(g))] {
                    if set.insert(y) {
                        frontier.push(y);
                    }
                }
            }
        }
        let members: Vec<usize> = set.into_iter().collect();
        SubgroupEmbedding::new(parent, &members)
    }

    pub fn whole_group(parent: Arc<FiniteGroup>) -> Result<Self> {
        let members: Vec<usize> = parent.elements().collect();
        SubgroupEmbedding::new(parent, &members)
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn induced(&self) -> &Arc<FiniteGroup> {
        &self.induced
    }

    pub fn member_indices(&self) -> &[usize] {
        &self.member_indices
    }

    pub fn subgroup_order(&self) -> usize {
        self.parent_of.len()
    }

    pub fn parent_of(&self, k: usize) -> usize {
        self.parent_of[k]
    }

    pub fn k_index_of(&self, parent_index: usize) -> Option<usize> {
        self.k_index[parent_index]
    }
}

#[derive(Clone, Debug)]
pub struct CosetDecomposition {
    embedding: SubgroupEmbedding,
    /// Right cosets Kx as sorted parent-index lists.
    cosets: Vec<Vec<usize>>,
    /// One representative τ(Kx) per coset.
    cross_section: Vec<usize>,
    /// parent index → coset id.
    coset_of: Vec<usize>,
}

impl CosetDecomposition {
    /// Decompose with the canonical cross section: τ(Kx) = smallest parent
    /// index in the coset. Deterministic by construction.
    pub fn new(embedding: SubgroupEmbedding) -> Result<Self> {
        Self::build(embedding, |coset| coset[0])
    }

    /// Same partition, non-canonical representatives; for checking that
    /// derived quantities do not depend on the cross section.
    pub fn with_max_representatives(embedding: SubgroupEmbedding) -> Result<Self> {
        Self::build(embedding, |coset| *coset.last().unwrap())
    }

    pub fn with_representatives(embedding: SubgroupEmbedding, reps: &[usize]) -> Result<Self> {
        let base = Self::new(embedding.clone())?;
        if reps.len() != base.cosets.len() {
            return Err(Error::SizeMismatch(format!(
                "{} representatives for {} cosets",
                reps.len(),
                base.cosets.len()
            )));
        }
        let mut seen = vec![false; base.cosets.len()];
        for &r in reps {
            let c = base.coset_of[r];
            if std::mem::replace(&mut seen[c], true) {
                return Err(Error::InvalidInput(format!(
                    "coset {c} has two representatives"
                )));
            }
        }
        Self::build(embedding, |coset| {
            *reps
                .iter()
                .find(|&&r| coset.binary_search(&r).is_ok())
                .expect("one representative per coset")
        })
    }

    fn build(
        embedding: SubgroupEmbedding,
        pick: impl Fn(&[usize]) -> usize,
    ) -> Result<Self> {
        let parent = embedding.parent().clone();
        let n = parent.order();
        let k = embedding.subgroup_order();
        let mut coset_of = vec![usize::MAX; n];
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let id = cosets.len();
            let members: BTreeSet<usize> = (0..k)
                .map(|ki| parent.mul(embedding.parent_of(ki), x))
                .collect();
            let members: Vec<usize> = members.into_iter().collect();
            if members.len() != k {
                return Err(Error::NotASubgroup(format!(
                    "coset of {x} has {} elements, expected {k}",
                    members.len()
                )));
            }
            for &m in &members {
                coset_of[m] = id;
            }
            cosets.push(members);
        }
        let cross_section: Vec<usize> = cosets.iter().map(|c_| pick(c_)).collect();
        // (ξ, Kx) ↦ ξ·τ(Kx) must hit every element exactly once.
        let mut hit = vec![false; n];
        for (c_, &tau) in cross_section.iter().enumerate() {
            if coset_of[tau] != c_ {
                return Err(Error::InvalidInput(format!(
                    "representative {tau} is not in coset {c_}"
                )));
            }
            for ki in 0..k {
                let g = parent.mul(embedding.parent_of(ki), tau);
                if std::mem::replace(&mut hit[g], true) {
                    return Err(Error::NotASubgroup(format!(
                        "(ξ, coset) ↦ ξ·τ fails to be a bijection at element {g}"
                    )));
                }
            }
        }
        Ok(CosetDecomposition {
            embedding,
            cosets,
            cross_section,
            coset_of,
        })
    }

    pub fn embedding(&self) -> &SubgroupEmbedding {
        &self.embedding
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        self.embedding.parent()
    }

    pub fn n_cosets(&self) -> usize {
        self.cosets.len()
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    pub fn representative(&self, coset: usize) -> usize {
        self.cross_section[coset]
    }

    pub fn coset_of(&self, parent_index: usize) -> usize {
        self.coset_of[parent_index]
    }
}

#[derive(Clone, Debug)]
pub struct GroupAction {
    group: Arc<FiniteGroup>,
    set_size: usize,
    /// One permutation of 0..set_size per group element.
    action_table: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn new(
        group: Arc<FiniteGroup>,
        set_size: usize,
        action_table: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if action_table.len() != group.order() {
            return Err(Error::SizeMismatch(format!(
                "{} permutations for a group of order {}",
                action_table.len(),
                group.order()
            )));
        }
        for (g, perm) in action_table.iter().enumerate() {
            if perm.len() != set_size {
                return Err(Error::SizeMismatch(format!(
                    "permutation for element {g} has length {}",
                    perm.len()
                )));
            }
            let mut seen = vec![false; set_size];
            for &img in perm {
                if img >= set_size || std::mem::replace(&mut seen[img], true) {
                    return Err(Error::InvalidInput(format!(
                        "element {g} does not act by a permutation"
                    )));
                }
            }
        }
        let e = group.identity();
        if (0..set_size).any(|x| action_table[e][x] != x) {
            return Err(Error::InvalidInput("identity does not act trivially".into()));
        }
        for g in group.elements() {
            for h in group.elements() {
                let gh = group.mul(g, h);
                for x in 0..set_size {
                    if action_table[gh][x] != action_table[g][action_table[h][x]] {
                        return Err(Error::InvalidInput(format!(
                            "action is not a homomorphism at ({g}·{h})·{x}"
                        )));
                    }
                }
            }
        }
        Ok(GroupAction {
            group,
            set_size,
            action_table,
        })
    }

    /// Natural action of symmetric:n on n points.
    pub fn natural_symmetric(n: usize) -> Result<Self> {
        let group = FiniteGroup::symmetric(n)?;
        let perms = all_permutations(n);
        GroupAction::new(group, n, perms)
    }

    /// A group acting on itself by left translation.
    pub fn left_translation(group: Arc<FiniteGroup>) -> Result<Self> {
        let n = group.order();
        let table = (0..n)
            .map(|g| (0..n).map(|x| group.mul(g, x)).collect())
            .collect();
        GroupAction::new(group, n, table)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn set_size(&self) -> usize {
        self.set_size
    }

    pub fn apply(&self, g: usize, x: usize) -> usize {
        self.action_table[g][x]
    }

    pub fn permutation(&self, g: usize) -> &[usize] {
        &self.action_table[g]
    }

    /// True when every ordered pair of distinct points can be carried to
    /// every other; vacuously true for |X| ≤ 1. A single orbit check
    /// suffices: the diagonal action is transitive on distinct pairs iff the
    /// orbit of one distinct pair covers them all.
    pub fn is_two_transitive(&self) -> bool {
        let n = self.set_size;
        if n <= 1 {
            return true;
        }
        let mut covered = vec![false; n * n];
        let mut count = 0usize;
        for g in self.group.elements() {
            let (w, z) = (self.apply(g, 0), self.apply(g, 1));
            if !std::mem::replace(&mut covered[w * n + z], true) {
                count += 1;
            }
        }
        count == n * (n - 1)
    }
}

/// Extend generator images to a full homomorphism by closing words over the
/// generators (BFS from the identity), then verify multiplicativity on all
/// pairs. Fails if the generators do not generate `src` or the images are
/// inconsistent.
pub fn hom_from_generator_images(
    src: &FiniteGroup,
    dst: &FiniteGroup,
    images: &[(usize, usize)],
) -> Result<Vec<usize>> {
    let n = src.order();
    let mut map: Vec<Option<usize>> = vec![None; n];
    map[src.identity()] = Some(dst.identity());
    let mut frontier = vec![src.identity()];
    while let Some(x) = frontier.pop() {
        let fx = map[x].unwrap();
        for &(g, fg) in images {
            let y = src.mul(x, g);
            let fy = dst.mul(fx, fg);
            match map[y] {
                None => {
                    map[y] = Some(fy);
                    frontier.push(y);
                }
                Some(prev) if prev != fy => {
                    return Err(Error::InvalidInput(format!(
                        "generator images are inconsistent at element {y}"
                    )));
                }
                _ => {}
            }
        }
    }
    let map: Vec<usize> = map
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::InvalidInput("generators do not generate the group".into()))?;
    for a in 0..n {
        for b in 0..n {
            if map[src.mul(a, b)] != dst.mul(map[a], map[b]) {
                return Err(Error::InvalidInput(format!(
                    "not a homomorphism at {a}·{b}"
                )));
            }
        }
    }
    Ok(map)
}

/// Order of an element: smallest m ≥ 1 with x^m = e.
pub fn element_order(group: &FiniteGroup, x: usize) -> usize {
    let mut m = 1;
    let mut acc = x;
    while acc != group.identity() {
        acc = group.mul(acc, x);
        m += 1;
    }
    m
}

/// Search for an isomorphism `a → b` (as an index map), or `None` when the
/// groups are not isomorphic. Deterministic: the greedy generating set of `a`
/// takes smallest-index elements first, candidate images are tried in index
/// order. Intended for the small groups this crate works with; the search
/// enumerates order-matched generator images only.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<Vec<usize>> {
    let n = a.order();
    if n != b.order() {
        return None;
    }
    if a == b {
        return Some((0..n).collect());
    }
    let mut orders_a: Vec<usize> = (0..n).map(|x| element_order(a, x)).collect();
    let mut orders_b: Vec<usize> = (0..n).map(|x| element_order(b, x)).collect();
    let (raw_a, raw_b) = (orders_a.clone(), orders_b.clone());
    orders_a.sort_unstable();
    orders_b.sort_unstable();
    if orders_a != orders_b {
        return None;
    }
    // Greedy generating set: smallest-index element outside the current
    // closure, repeated until everything is reached.
    let mut gens: Vec<usize> = Vec::new();
    let mut closure = vec![false; n];
    closure[a.identity()] = true;
    let mut reached = 1;
    while reached < n {
        let g = (0..n).find(|&x| !closure[x]).unwrap();
        gens.push(g);
        // close under multiplication by the enlarged generating set
        let mut frontier: Vec<usize> = (0..n).filter(|&x| closure[x]).collect();
        while let Some(x) = frontier.pop() {
            for &h in &gens {
                let y = a.mul(x, h);
                if !closure[y] {
                    closure[y] = true;
                    reached += 1;
                    frontier.push(y);
                }
            }
        }
    }
    // Candidate images per generator: order-matched elements of b.
    let cands: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| (0..n).filter(|&y| raw_b[y] == raw_a[g]).collect())
        .collect();
    let mut pick = vec![0usize; gens.len()];
    'search: loop {
        let images: Vec<(usize, usize)> = gens
            .iter()
            .enumerate()
            .map(|(slot, &g)| (g, cands[slot][pick[slot]]))
            .collect();
        if let Ok(map) = hom_from_generator_images(a, b, &images) {
            let mut seen = vec![false; n];
            if map.iter().all(|&y| !std::mem::replace(&mut seen[y], true)) {
                return Some(map);
            }
        }
        // advance the mixed-radix counter over candidate tuples
        for slot in (0..pick.len()).rev() {
            pick[slot] += 1;
            if pick[slot] < cands[slot].len() {
                continue 'search;
            }
            pick[slot] = 0;
            if slot == 0 {
                return None;
            }
        }
        return None;
    }
}
