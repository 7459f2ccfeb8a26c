use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{is_zero_mod, rank, FgAbelianGroup, IntMatrix};

/// Homomorphism of finitely generated abelian groups, given by the images of
/// the standard generators of the source (free generators first) written in
/// the standard generators of the target.
///
/// Torsion coordinates of images are stored reduced modulo the target
/// invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianHom {
    pub source: FgAbelianGroup,
    pub target: FgAbelianGroup,
    images: Vec<Vec<BigInt>>,
}

impl AbelianHom {
    pub fn new(source: FgAbelianGroup, target: FgAbelianGroup, images: Vec<Vec<BigInt>>) -> Result<Self> {
        if images.len() != source.generator_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} generator images for a source with {} generators",
                images.len(),
                source.generator_count()
            )));
        }
        let width = target.generator_count();
        let mut reduced = Vec::with_capacity(images.len());
        for (g, img) in images.into_iter().enumerate() {
            if img.len() != width {
                return Err(Error::DimensionMismatch(format!(
                    "image of generator {g} has {} coordinates, target has {width} generators",
                    img.len()
                )));
            }
            let img: Vec<BigInt> = img
                .into_iter()
                .enumerate()
                .map(|(j, c)| match target.generator_order(j) {
                    Some(o) => c.mod_floor(o),
                    None => c,
                })
                .collect();
            if let Some(order) = source.generator_order(g) {
                // order * image must vanish in the target
                for (j, c) in img.iter().enumerate() {
                    let ok = match target.generator_order(j) {
                        Some(o) => is_zero_mod(&(c * order), o),
                        None => c.is_zero(),
                    };
                    if !ok {
                        return Err(Error::NotAHomomorphism(format!(
                            "generator {g} of order {order} maps to an element whose order does not divide {order}"
                        )));
                    }
                }
            }
            reduced.push(img);
        }
        Ok(Self { source, target, images: reduced })
    }

    /// `Z^cols -> Z^rows` acting on column vectors.
    pub fn free(matrix: &IntMatrix) -> Self {
        Self {
            source: FgAbelianGroup::free(matrix.cols()),
            target: FgAbelianGroup::free(matrix.rows()),
            images: matrix.columns(),
        }
    }

    /// Zero map `Z^source_rank -> Z^target_rank`.
    pub fn zero(source_rank: usize, target_rank: usize) -> Self {
        Self {
            source: FgAbelianGroup::free(source_rank),
            target: FgAbelianGroup::free(target_rank),
            images: alloc::vec![alloc::vec![BigInt::zero(); target_rank]; source_rank],
        }
    }

    pub fn images(&self) -> &[Vec<BigInt>] {
        &self.images
    }

    /// Free-to-free block (`target free rank x source free rank`), `None`
    /// when either free rank is zero.
    pub fn free_matrix(&self) -> Option<IntMatrix> {
        let (r, s) = (self.source.free_rank, self.target.free_rank);
        if r == 0 || s == 0 {
            return None;
        }
        let cols: Vec<Vec<BigInt>> = self.images[..r].iter().map(|img| img[..s].to_vec()).collect();
        Some(IntMatrix::from_columns(&cols).expect("nonempty"))
    }

    /// Torsion coordinates of the images of the free generators.
    pub fn free_to_torsion(&self) -> Vec<Vec<BigInt>> {
        let (r, s) = (self.source.free_rank, self.target.free_rank);
        self.images[..r].iter().map(|img| img[s..].to_vec()).collect()
    }

    /// Torsion coordinates of the images of the torsion generators.
    pub fn torsion_to_torsion(&self) -> Vec<Vec<BigInt>> {
        let (r, s) = (self.source.free_rank, self.target.free_rank);
        self.images[r..].iter().map(|img| img[s..].to_vec()).collect()
    }

    /// Rank of the image of the free part.
    pub fn image_rank(&self) -> usize {
        self.free_matrix().map_or(0, |m| rank(&m))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RankReport {
    pub kernel: usize,
    pub image: usize,
    pub cokernel: usize,
    pub parity: Parity,
}

/// Ranks of kernel, image and cokernel. For source and target of even rank
/// all three share a parity; a Kähler homomorphism requires it to be even.
/// Torsion does not affect ranks.
pub fn check_even_rank(f: &AbelianHom) -> Result<RankReport> {
    for g in [&f.source, &f.target] {
        if !g.has_even_rank() {
            return Err(Error::OddFreeRank(g.free_rank));
        }
    }
    let image = f.image_rank();
    let kernel = f.source.free_rank - image;
    let cokernel = f.target.free_rank - image;
    assert!(
        kernel % 2 == image % 2 && cokernel % 2 == image % 2,
        "rank parities disagree for even-rank source and target"
    );
    let parity = if image % 2 == 0 { Parity::Even } else { Parity::Odd };
    Ok(RankReport { kernel, image, cokernel, parity })
}

/// How the torsion component is realized; no geometry is produced for it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TorsionRoute {
    /// No torsion component.
    None,
    /// Only torsion-to-torsion data: realized by manifolds with prescribed
    /// finite fundamental group.
    Symbolic,
    /// The free part maps nontrivially to torsion: realized through the
    /// finite cover cut out by a graph subgroup.
    GraphSubgroup,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionPart {
    pub source_torsion: Vec<BigInt>,
    pub target_torsion: Vec<BigInt>,
    pub free_to_torsion: Vec<Vec<BigInt>>,
    pub torsion_to_torsion: Vec<Vec<BigInt>>,
    pub route: TorsionRoute,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionSplit {
    /// Free-to-free component; `None` when the source or target has no free part.
    pub free_part: Option<AbelianHom>,
    pub torsion_part: TorsionPart,
}

/// Splits a homomorphism along `A = free ⊕ torsion`. The torsion-to-free
/// component is zero for every homomorphism (checked on construction).
pub fn split_torsion(f: &AbelianHom) -> TorsionSplit {
    let free_part = f.free_matrix().map(|m| AbelianHom::free(&m));
    let free_to_torsion = f.free_to_torsion();
    let torsion_to_torsion = f.torsion_to_torsion();
    let route = if free_to_torsion.iter().flatten().any(|c| !c.is_zero()) {
        TorsionRoute::GraphSubgroup
    } else if f.source.torsion.is_empty() && f.target.torsion.is_empty() {
        TorsionRoute::None
    } else {
        TorsionRoute::Symbolic
    };
    TorsionSplit {
        free_part,
        torsion_part: TorsionPart {
            source_torsion: f.source.torsion.clone(),
            target_torsion: f.target.torsion.clone(),
            free_to_torsion,
            torsion_to_torsion,
            route,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rank_examples() {
        let d = AbelianHom::free(&IntMatrix::from_i64(&[&[2, 0], &[0, 6]]).unwrap());
        let r = check_even_rank(&d).unwrap();
        assert_eq!((r.kernel, r.image, r.cokernel, r.parity), (0, 2, 0, Parity::Even));

        let odd = AbelianHom::free(&IntMatrix::from_i64(&[&[1, 0], &[0, 0]]).unwrap());
        let r = check_even_rank(&odd).unwrap();
        assert_eq!((r.kernel, r.image, r.cokernel, r.parity), (1, 1, 1, Parity::Odd));

        let z = AbelianHom::zero(2, 4);
        let r = check_even_rank(&z).unwrap();
        assert_eq!((r.kernel, r.image, r.cokernel), (2, 0, 4));

        let bad = AbelianHom::free(&IntMatrix::from_i64(&[&[1, 0, 0]]).unwrap());
        assert_eq!(check_even_rank(&bad), Err(Error::OddFreeRank(3)));
    }

    #[test]
    fn torsion_must_respect_orders() {
        let z5 = FgAbelianGroup::new(0, bi(&[5])).unwrap();
        let z10 = FgAbelianGroup::new(0, bi(&[10])).unwrap();
        let f = AbelianHom::new(z5.clone(), z10.clone(), vec![bi(&[2])]).unwrap();
        let s = split_torsion(&f);
        assert!(s.free_part.is_none());
        assert_eq!(s.torsion_part.route, TorsionRoute::Symbolic);
        assert_eq!(s.torsion_part.torsion_to_torsion, vec![bi(&[2])]);
        assert!(matches!(AbelianHom::new(z5, z10, vec![bi(&[1])]), Err(Error::NotAHomomorphism(_))));

        // torsion to free is always zero
        let z3 = FgAbelianGroup::new(0, bi(&[3])).unwrap();
        assert!(AbelianHom::new(z3, FgAbelianGroup::free(2), vec![bi(&[1, 0])]).is_err());
    }

    #[test]
    fn split_examples() {
        let src = FgAbelianGroup::new(2, bi(&[3])).unwrap();
        let f = AbelianHom::new(src, FgAbelianGroup::free(2), vec![bi(&[1, 2]), bi(&[3, 4]), bi(&[0, 0])]).unwrap();
        let s = split_torsion(&f);
        assert_eq!(s.free_part.unwrap().free_matrix().unwrap(), IntMatrix::from_i64(&[&[1, 3], &[2, 4]]).unwrap());
        assert_eq!(s.torsion_part.torsion_to_torsion, vec![Vec::<BigInt>::new()]);

        let tgt = FgAbelianGroup::new(2, bi(&[2])).unwrap();
        let g = AbelianHom::new(FgAbelianGroup::free(2), tgt, vec![bi(&[1, 0, 1]), bi(&[0, 1, 3])]).unwrap();
        let s = split_torsion(&g);
        assert_eq!(s.torsion_part.route, TorsionRoute::GraphSubgroup);
        assert_eq!(s.torsion_part.free_to_torsion, vec![bi(&[1]), bi(&[1])]);
    }
}
