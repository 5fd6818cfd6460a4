//! Simple-type degree tables, the folding pairs, the mod-4 partition of
//! Kazhdan degrees, and the deformation-universality classification.

use num::bigint::BigInt;
use num::traits::One;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DynkinError {
    #[error("invalid rank {rank} for type {dtype:?}")]
    InvalidRank { dtype: DynkinType, rank: u32 },
    #[error("type {dtype:?} has no folding target")]
    NoFolding { dtype: DynkinType },
    #[error("orbit class {class:?} is inconsistent with type {dtype:?}")]
    InconsistentOrbit { dtype: DynkinType, class: OrbitClass },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum DynkinType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl std::fmt::Display for DynkinType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A simple type with its fundamental invariant degrees. Kazhdan degrees
/// are the total degrees doubled.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DynkinDatum {
    pub dtype: DynkinType,
    pub rank: u32,
    pub degrees: Vec<u32>,
}

impl DynkinDatum {
    pub fn kazhdan_degrees(&self) -> Vec<u32> {
        self.degrees.iter().map(|d| 2 * d).collect()
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.dtype, self.rank)
    }
}

/// Order of the Weyl group, from the standard product formulas.
pub fn weyl_order(dtype: DynkinType, rank: u32) -> Result<BigInt, DynkinError> {
    fn factorial(k: u32) -> BigInt {
        let mut acc = BigInt::one();
        for i in 2..=k {
            acc *= BigInt::from(i);
        }
        acc
    }
    let order = match (dtype, rank) {
        (DynkinType::A, r) if r >= 1 => factorial(r + 1),
        (DynkinType::B | DynkinType::C, r) if r >= 2 => factorial(r) * BigInt::from(2u64).pow(r),
        (DynkinType::D, r) if r >= 3 => factorial(r) * BigInt::from(2u64).pow(r - 1),
        (DynkinType::E, 6) => BigInt::from(51_840u64),
        (DynkinType::E, 7) => BigInt::from(2_903_040u64),
        (DynkinType::E, 8) => BigInt::from(696_729_600u64),
        (DynkinType::F, 4) => BigInt::from(1152u64),
        (DynkinType::G, 2) => BigInt::from(12u64),
        _ => return Err(DynkinError::InvalidRank { dtype, rank }),
    };
    Ok(order)
}

/// The classical table of fundamental degrees.
pub fn fundamental_degrees(dtype: DynkinType, rank: u32) -> Result<DynkinDatum, DynkinError> {
    let degrees: Vec<u32> = match (dtype, rank) {
        (DynkinType::A, r) if r >= 1 => (2..=r + 1).collect(),
        (DynkinType::B | DynkinType::C, r) if r >= 2 => (1..=r).map(|i| 2 * i).collect(),
        (DynkinType::D, r) if r >= 3 => {
            let mut d: Vec<u32> = (1..r).map(|i| 2 * i).collect();
            d.push(r);
            d.sort_unstable();
            d
        }
        (DynkinType::E, 6) => vec![2, 5, 6, 8, 9, 12],
        (DynkinType::E, 7) => vec![2, 6, 8, 10, 12, 14, 18],
        (DynkinType::E, 8) => vec![2, 8, 12, 14, 18, 20, 24, 30],
        (DynkinType::F, 4) => vec![2, 6, 8, 12],
        (DynkinType::G, 2) => vec![2, 6],
        _ => return Err(DynkinError::InvalidRank { dtype, rank }),
    };
    Ok(DynkinDatum {
        dtype,
        rank,
        degrees,
    })
}

/// Index sets of Kazhdan degrees congruent to 0 resp. 2 mod 4.
pub fn lambda_partition(datum: &DynkinDatum) -> (Vec<usize>, Vec<usize>) {
    let mut lambda0 = Vec::new();
    let mut lambda2 = Vec::new();
    for (i, k) in datum.kazhdan_degrees().iter().enumerate() {
        if k % 4 == 0 {
            lambda0.push(i);
        } else {
            lambda2.push(i);
        }
    }
    (lambda0, lambda2)
}

/// An unfolding: the simply-laced type whose diagram folds onto the given
/// non-simply-laced one, with the order of the folding group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FoldingPair {
    pub folded: DynkinDatum,
    pub unfolded: DynkinDatum,
    pub gamma0_order: u32,
}

/// `B_n -> A_{2n-1}`, `C_n -> D_{n+1}`, `F_4 -> E_6`, `G_2 -> D_4`. The
/// folding group has order 2 except for `(G_2, D_4)` where it has order 3;
/// for `(C_3, D_4)` the relevant group is the order-2 subgroup of the
/// triality group.
pub fn folding_pair(dtype: DynkinType, rank: u32) -> Result<FoldingPair, DynkinError> {
    let folded = fundamental_degrees(dtype, rank)?;
    let (unfolded, gamma0_order) = match (dtype, rank) {
        (DynkinType::B, n) if n >= 2 => (fundamental_degrees(DynkinType::A, 2 * n - 1)?, 2),
        (DynkinType::C, n) if n >= 2 => (fundamental_degrees(DynkinType::D, n + 1)?, 2),
        (DynkinType::F, 4) => (fundamental_degrees(DynkinType::E, 6)?, 2),
        (DynkinType::G, 2) => (fundamental_degrees(DynkinType::D, 4)?, 3),
        _ => return Err(DynkinError::NoFolding { dtype }),
    };
    Ok(FoldingPair {
        folded,
        unfolded,
        gamma0_order,
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FoldingReport {
    pub pair: FoldingPair,
    /// Kazhdan degrees of the unfolded type restricted to the mod-4-zero set.
    pub lambda0_kazhdan: Vec<u32>,
    pub lambda2_kazhdan: Vec<u32>,
    pub folded_kazhdan: Vec<u32>,
    pub pass: bool,
}

/// Check that the mod-4-zero Kazhdan degrees of the unfolded type are
/// exactly the Kazhdan degrees of the folded type, and that their count is
/// the folded rank. The pass set is exactly `B_n (n >= 2)`, `C_n (n even)`
/// and `F_4`.
pub fn folding_degree_check(pair: &FoldingPair) -> FoldingReport {
    let unfolded_kazhdan = pair.unfolded.kazhdan_degrees();
    let (lambda0, lambda2) = lambda_partition(&pair.unfolded);
    let mut lambda0_kazhdan: Vec<u32> = lambda0.iter().map(|&i| unfolded_kazhdan[i]).collect();
    let mut lambda2_kazhdan: Vec<u32> = lambda2.iter().map(|&i| unfolded_kazhdan[i]).collect();
    lambda0_kazhdan.sort_unstable();
    lambda2_kazhdan.sort_unstable();
    let mut folded_kazhdan = pair.folded.kazhdan_degrees();
    folded_kazhdan.sort_unstable();
    let pass = lambda0_kazhdan == folded_kazhdan
        && lambda0_kazhdan.len() == pair.folded.rank as usize;
    FoldingReport {
        pair: pair.clone(),
        lambda0_kazhdan,
        lambda2_kazhdan,
        folded_kazhdan,
        pass,
    }
}

/// The orbit taxonomy of the classification table.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrbitClass {
    Regular,
    Subregular,
    TwoJordanBlocksC,
    Dim8G,
    Other,
}

/// True when the slice is a universal Poisson deformation: the
/// `(type, orbit)` pair avoids all four exceptional rows — regular orbits in
/// any type, subregular in types B, C, F, G, two Jordan blocks in type C,
/// and the dimension-8 orbit in type G.
pub fn universality_table(dtype: DynkinType, class: OrbitClass) -> Result<bool, DynkinError> {
    match class {
        OrbitClass::TwoJordanBlocksC if dtype != DynkinType::C => {
            return Err(DynkinError::InconsistentOrbit { dtype, class })
        }
        OrbitClass::Dim8G if dtype != DynkinType::G => {
            return Err(DynkinError::InconsistentOrbit { dtype, class })
        }
        _ => {}
    }
    let excluded = match class {
        OrbitClass::Regular => true,
        OrbitClass::Subregular => matches!(
            dtype,
            DynkinType::B | DynkinType::C | DynkinType::F | DynkinType::G
        ),
        OrbitClass::TwoJordanBlocksC => true,
        OrbitClass::Dim8G => true,
        OrbitClass::Other => false,
    };
    Ok(!excluded)
}

/// The table row an exclusion verdict comes from, for report output.
pub fn universality_row(class: OrbitClass) -> &'static str {
    match class {
        OrbitClass::Regular => "regular orbit, any type",
        OrbitClass::Subregular => "subregular orbit, types B C F G",
        OrbitClass::TwoJordanBlocksC => "two Jordan blocks, type C",
        OrbitClass::Dim8G => "dimension-8 orbit, type G",
        OrbitClass::Other => "not an excluded row",
    }
}
