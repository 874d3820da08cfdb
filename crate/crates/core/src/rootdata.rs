//! Input data for homogeneous spaces: complementary-root weights with their
//! signs already applied, Weyl coset representatives for unitary block
//! quotients, and the orbit construction that produces the full fixed-point
//! table.
//!
//! Built-in Weyl machinery covers type A only (every quotient of unitary
//! groups); anything else enters through an explicit fixed-point list where
//! the caller supplies the full orbit.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// One weight of the torus representation at a fixed point: an integer
/// vector of length `k` (the rank).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    components: Vec<i64>,
}

impl Weight {
    pub fn new(components: Vec<i64>) -> Self {
        Weight { components }
    }

    /// The weight `x_i - x_j` in rank `k` (indices 1-based).
    pub fn root_difference(i: usize, j: usize, k: usize) -> Self {
        let mut c = vec![0i64; k];
        c[i - 1] = 1;
        c[j - 1] = -1;
        Weight { components: c }
    }

    pub fn components(&self) -> &[i64] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|&c| c == 0)
    }

    pub fn negated(&self) -> Weight {
        Weight { components: self.components.iter().map(|c| -c).collect() }
    }

    /// Applies a coordinate permutation in one-line notation (1-based):
    /// the coefficient of `x_l` moves to `x_{perm[l-1]}`.
    pub fn permuted(&self, perm: &[u32]) -> Weight {
        let mut c = vec![0i64; self.components.len()];
        for (l, &v) in self.components.iter().enumerate() {
            c[perm[l] as usize - 1] = v;
        }
        Weight { components: c }
    }

    /// Canonical representative of the line `{+w, -w}`: the first nonzero
    /// component is made positive.
    fn line(&self) -> Weight {
        match self.components.iter().find(|&&c| c != 0) {
            Some(&c) if c < 0 => self.negated(),
            _ => self.clone(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Ordered list of disjoint index blocks covering `{1, ..., k}`, describing
/// the subgroup `H = U(n_1) x ... x U(n_s)` inside `U(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPartition {
    blocks: Vec<Vec<usize>>, // 1-based indices, each block sorted
    rank: usize,
}

impl BlockPartition {
    pub fn new(blocks: Vec<Vec<usize>>, rank: usize) -> Result<Self, SpecError> {
        let mut seen = BTreeSet::new();
        let mut sorted_blocks = Vec::with_capacity(blocks.len());
        for mut b in blocks {
            b.sort_unstable();
            for &i in &b {
                if i == 0 || i > rank || !seen.insert(i) {
                    return Err(SpecError::BadBlocks);
                }
            }
            sorted_blocks.push(b);
        }
        if seen.len() != rank {
            return Err(SpecError::BadBlocks);
        }
        Ok(BlockPartition { blocks: sorted_blocks, rank })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `k! / prod |b_i|!` as an exact integer.
    pub fn coset_count(&self) -> u64 {
        let mut count = factorial(self.rank as u64);
        for b in &self.blocks {
            count /= factorial(b.len() as u64);
        }
        count
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product::<u64>().max(1)
}

/// One localized summand: a sign and the ordered tangent weights at one
/// fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointDatum {
    pub sign: i8,
    pub weights: Vec<Weight>,
}

impl FixedPointDatum {
    pub fn new(sign: i8, weights: Vec<Weight>) -> Result<Self, SpecError> {
        if sign != 1 && sign != -1 {
            return Err(SpecError::BadSign);
        }
        if weights.iter().any(Weight::is_zero) {
            return Err(SpecError::ZeroWeight);
        }
        Ok(FixedPointDatum { sign, weights })
    }
}

/// Errors constructing or validating a [`SpaceSpec`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecError {
    BadBlocks,
    BadSign,
    ZeroWeight,
    /// A weight has the wrong number of components.
    RankMismatch,
    /// Weight lists differ in length across fixed points.
    LengthMismatch,
    /// The identity weights are not stable under block-wise coordinate
    /// permutations.
    NotStable(String),
    BadParameters,
    EmptyFixedPoints,
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::BadBlocks => write!(f, "blocks must partition {{1..k}}"),
            SpecError::BadSign => write!(f, "sign must be +1 or -1"),
            SpecError::ZeroWeight => write!(f, "zero weight at a fixed point"),
            SpecError::RankMismatch => write!(f, "weight length does not match the rank"),
            SpecError::LengthMismatch => write!(f, "fixed points carry different numbers of weights"),
            SpecError::NotStable(what) => write!(f, "identity weights not W_H-stable: {what}"),
            SpecError::BadParameters => write!(f, "builtin parameters out of range"),
            SpecError::EmptyFixedPoints => write!(f, "fixed-point list is empty"),
        }
    }
}

/// How W_H-stability of the identity weights is validated.
///
/// A block transposition may legally flip a weight's sign (conjugate
/// structure on one irreducible summand), so the default check compares the
/// sets of weight lines `{+w, -w}`. Strict mode demands exact set equality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum StabilityMode {
    #[default]
    Lines,
    Strict,
}

/// Description of the input manifold: a named unitary quotient with the
/// sign-applied identity weights, or an explicit fixed-point table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceSpec {
    UnitaryQuotient {
        rank: usize,
        blocks: BlockPartition,
        identity_weights: Vec<Weight>,
    },
    ExplicitFixedPoints {
        rank: usize,
        fixed_points: Vec<FixedPointDatum>,
    },
}

impl SpaceSpec {
    /// Builds and validates a unitary-quotient spec. Checks weight ranks,
    /// nonzero weights, and W_H-stability of the identity weight set.
    pub fn unitary_quotient(
        rank: usize,
        blocks: BlockPartition,
        identity_weights: Vec<Weight>,
        mode: StabilityMode,
    ) -> Result<Self, SpecError> {
        if blocks.rank() != rank {
            return Err(SpecError::RankMismatch);
        }
        for w in &identity_weights {
            if w.rank() != rank {
                return Err(SpecError::RankMismatch);
            }
            if w.is_zero() {
                return Err(SpecError::ZeroWeight);
            }
        }
        // Adjacent transpositions inside each block generate W_H; checking
        // the generators suffices since set stability is a group property.
        for block in blocks.blocks() {
            for pair in block.windows(2) {
                let mut perm: Vec<u32> = (1..=rank as u32).collect();
                perm.swap(pair[0] - 1, pair[1] - 1);
                let stable = match mode {
                    StabilityMode::Strict => {
                        let orig: BTreeSet<_> = identity_weights.iter().cloned().collect();
                        let img: BTreeSet<_> =
                            identity_weights.iter().map(|w| w.permuted(&perm)).collect();
                        orig == img
                    }
                    StabilityMode::Lines => {
                        let orig: BTreeSet<_> = identity_weights.iter().map(Weight::line).collect();
                        let img: BTreeSet<_> = identity_weights
                            .iter()
                            .map(|w| w.permuted(&perm).line())
                            .collect();
                        orig == img
                    }
                };
                if !stable {
                    use alloc::format;
                    return Err(SpecError::NotStable(format!(
                        "transposition ({},{})",
                        pair[0], pair[1]
                    )));
                }
            }
        }
        Ok(SpaceSpec::UnitaryQuotient { rank, blocks, identity_weights })
    }

    pub fn explicit(rank: usize, fixed_points: Vec<FixedPointDatum>) -> Result<Self, SpecError> {
        if fixed_points.is_empty() {
            return Err(SpecError::EmptyFixedPoints);
        }
        let n = fixed_points[0].weights.len();
        for p in &fixed_points {
            if p.weights.len() != n {
                return Err(SpecError::LengthMismatch);
            }
            for w in &p.weights {
                if w.rank() != rank {
                    return Err(SpecError::RankMismatch);
                }
                if w.is_zero() {
                    return Err(SpecError::ZeroWeight);
                }
            }
        }
        Ok(SpaceSpec::ExplicitFixedPoints { rank, fixed_points })
    }

    pub fn rank(&self) -> usize {
        match self {
            SpaceSpec::UnitaryQuotient { rank, .. } => *rank,
            SpaceSpec::ExplicitFixedPoints { rank, .. } => *rank,
        }
    }

    /// Half-dimension `n`: the number of weights at each fixed point.
    pub fn half_dimension(&self) -> usize {
        match self {
            SpaceSpec::UnitaryQuotient { identity_weights, .. } => identity_weights.len(),
            SpaceSpec::ExplicitFixedPoints { fixed_points, .. } => fixed_points[0].weights.len(),
        }
    }
}

/// Minimal-length representatives of the left cosets of
/// `S_{b_1} x ... x S_{b_s}` in `S_k`: exactly the permutations increasing on
/// each block, in lexicographic order of their one-line notation. One-line
/// notation, 1-based.
pub fn coset_representatives(bp: &BlockPartition) -> Vec<Vec<u32>> {
    let k = bp.rank();
    let mut out = Vec::new();
    let mut current = vec![0u32; k];
    let mut available: Vec<u32> = (1..=k as u32).collect();
    assign_block(bp, 0, &mut current, &mut available, &mut out);
    out.sort_unstable();
    out
}

fn assign_block(
    bp: &BlockPartition,
    bi: usize,
    current: &mut Vec<u32>,
    available: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if bi == bp.blocks().len() {
        out.push(current.clone());
        return;
    }
    let block = &bp.blocks()[bi];
    let m = block.len();
    // choose an m-subset of the remaining values; sorted subset goes to the
    // sorted block indices, keeping the representative increasing on the block
    let n_avail = available.len();
    let mut idx: Vec<usize> = (0..m).collect();
    loop {
        let chosen: Vec<u32> = idx.iter().map(|&i| available[i]).collect();
        for (pos, &val) in block.iter().zip(&chosen) {
            current[pos - 1] = val;
        }
        let rest: Vec<u32> = available
            .iter()
            .enumerate()
            .filter(|(i, _)| !idx.contains(i))
            .map(|(_, &v)| v)
            .collect();
        let mut rest_m = rest;
        core::mem::swap(available, &mut rest_m);
        assign_block(bp, bi + 1, current, available, out);
        core::mem::swap(available, &mut rest_m);

        // next combination
        let mut i = m;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n_avail - m {
                idx[i] += 1;
                for j in i + 1..m {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Euler characteristic: the number of fixed points.
pub fn euler_characteristic(spec: &SpaceSpec) -> u64 {
    match spec {
        SpaceSpec::UnitaryQuotient { blocks, .. } => blocks.coset_count(),
        SpaceSpec::ExplicitFixedPoints { fixed_points, .. } => fixed_points.len() as u64,
    }
}

/// The full fixed-point table: one datum per Weyl coset representative with
/// the permuted identity weights and sign `+1` (explicit tables pass through
/// unchanged).
pub fn orbit_fixed_points(spec: &SpaceSpec) -> Result<Vec<FixedPointDatum>, SpecError> {
    match spec {
        SpaceSpec::ExplicitFixedPoints { fixed_points, .. } => Ok(fixed_points.clone()),
        SpaceSpec::UnitaryQuotient { blocks, identity_weights, .. } => {
            let reps = coset_representatives(blocks);
            let mut table = Vec::with_capacity(reps.len());
            for rep in &reps {
                let weights: Vec<Weight> =
                    identity_weights.iter().map(|w| w.permuted(rep)).collect();
                if weights.iter().any(Weight::is_zero) {
                    return Err(SpecError::ZeroWeight);
                }
                table.push(FixedPointDatum { sign: 1, weights });
            }
            Ok(table)
        }
    }
}

/// The built-in spaces of the standard complex (or almost complex)
/// structures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builtin {
    /// Flag manifold `U(n)/T^n`.
    Flag(usize),
    /// Grassmann manifold `G_{n,k} = U(n)/(U(k) x U(n-k))`.
    Grassmann(usize, usize),
    /// Complex projective space `CP^n`.
    ProjectiveSpace(usize),
    /// `M^10 = SU(4)/S(U(1) x U(1) x U(2))` with one of its three invariant
    /// almost complex structures.
    M10(M10Structure),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum M10Structure {
    J1,
    J2,
    J3,
}

/// Builds the spec for a built-in space.
pub fn builtin_space(b: Builtin) -> Result<SpaceSpec, SpecError> {
    let spec = match b {
        Builtin::Flag(n) => {
            if n < 2 {
                return Err(SpecError::BadParameters);
            }
            let blocks = BlockPartition::new((1..=n).map(|i| vec![i]).collect(), n)?;
            let mut weights = Vec::new();
            for i in 1..=n {
                for j in i + 1..=n {
                    weights.push(Weight::root_difference(i, j, n));
                }
            }
            SpaceSpec::unitary_quotient(n, blocks, weights, StabilityMode::Strict)?
        }
        Builtin::Grassmann(n, k) => {
            if k == 0 || k >= n {
                return Err(SpecError::BadParameters);
            }
            let blocks =
                BlockPartition::new(vec![(1..=k).collect(), (k + 1..=n).collect()], n)?;
            let mut weights = Vec::new();
            for i in 1..=k {
                for j in k + 1..=n {
                    weights.push(Weight::root_difference(i, j, n));
                }
            }
            SpaceSpec::unitary_quotient(n, blocks, weights, StabilityMode::Strict)?
        }
        Builtin::ProjectiveSpace(n) => {
            // CP^n = U(n+1)/(U(n) x U(1)) with weights x_j - x_{n+1}
            if n < 1 {
                return Err(SpecError::BadParameters);
            }
            let k = n + 1;
            let blocks = BlockPartition::new(vec![(1..=n).collect(), vec![k]], k)?;
            let weights = (1..=n).map(|j| Weight::root_difference(j, k, k)).collect();
            SpaceSpec::unitary_quotient(k, blocks, weights, StabilityMode::Strict)?
        }
        Builtin::M10(j) => {
            let blocks = BlockPartition::new(vec![vec![1, 2], vec![3], vec![4]], 4)?;
            let d = |i, j| Weight::root_difference(i, j, 4);
            let weights = match j {
                M10Structure::J1 => vec![d(1, 3), d(1, 4), d(2, 3), d(2, 4), d(3, 4)],
                M10Structure::J2 => vec![d(4, 1), d(4, 2), d(4, 3), d(1, 3), d(2, 3)],
                M10Structure::J3 => vec![d(1, 3), d(2, 3), d(4, 1), d(4, 2), d(3, 4)],
            };
            SpaceSpec::unitary_quotient(4, blocks, weights, StabilityMode::Strict)?
        }
    };
    Ok(spec)
}
