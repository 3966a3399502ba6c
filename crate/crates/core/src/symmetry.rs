//! Symmetry reduction for subsets of `D_2n`.
//!
//! The maps `y ↦ y^a, x ↦ x·y^b` with `gcd(a, n) = 1` are automorphisms of
//! `D_2n`. [`Canonicalizer::new`] checks each of them exhaustively (bijective
//! and multiplicative) before it is ever used.

use crate::error::{Error, Result};
use crate::group::{dihedral_group, gcd, DihedralElement, ElementId, GroupModel, SubsetMask};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DihedralAutomorphism {
    pub scale: u32,
    pub shift: u32,
}

impl DihedralAutomorphism {
    pub fn apply(self, e: DihedralElement, n: u32) -> DihedralElement {
        let rot = (self.scale as u64 * e.rot as u64 % n as u64) as u32;
        if e.refl {
            DihedralElement {
                refl: true,
                rot: (rot + self.shift) % n,
            }
        } else {
            DihedralElement { refl: false, rot }
        }
    }

    pub fn apply_id(self, id: ElementId, n: u32) -> ElementId {
        self.apply(DihedralElement::from_id(id, n), n).to_id(n)
    }
}

/// All candidate maps `(a, b)` for `D_2n`, in `(a, b)` order.
pub fn dihedral_automorphisms(n: u32) -> Vec<DihedralAutomorphism> {
    (1..n)
        .filter(|&a| gcd(a as usize, n as usize) == 1)
        .flat_map(|scale| (0..n).map(move |shift| DihedralAutomorphism { scale, shift }))
        .collect()
}

/// Checks that `phi` is a bijective homomorphism of `group`.
pub fn is_automorphism(group: &GroupModel, phi: &dyn Fn(ElementId) -> ElementId) -> bool {
    let mut seen = 0u64;
    for g in group.elements() {
        seen |= 1u64 << phi(g).0;
    }
    if seen != group.full_mask().bits() {
        return false;
    }
    group.elements().all(|a| {
        group
            .elements()
            .all(|b| phi(group.mul(a, b)) == group.mul(phi(a), phi(b)))
    })
}

/// Maps subsets to the numerically least mask in their automorphism orbit.
pub struct Canonicalizer {
    n: u32,
    chunks: usize,
    // images[(aut * chunks + chunk) * 256 + byte]
    images: Vec<u64>,
}

impl Canonicalizer {
    pub fn new(n: u32) -> Result<Canonicalizer> {
        let group = dihedral_group(n)?;
        let order = group.order();
        let auts = dihedral_automorphisms(n);
        for &phi in &auts {
            if !is_automorphism(&group, &|g| phi.apply_id(g, n)) {
                return Err(Error::SelfCheck(format!(
                    "map y->y^{}, x->x.y^{} is not an automorphism of D{}",
                    phi.scale, phi.shift, order
                )));
            }
        }
        let chunks = order.div_ceil(8);
        let mut images = vec![0u64; auts.len() * chunks * 256];
        for (k, &phi) in auts.iter().enumerate() {
            for c in 0..chunks {
                for byte in 1..256usize {
                    let mut img = 0u64;
                    for bit in 0..8 {
                        let id = c * 8 + bit;
                        if byte >> bit & 1 == 1 && id < order {
                            img |= 1u64 << phi.apply_id(ElementId(id as u8), n).0;
                        }
                    }
                    images[(k * chunks + c) * 256 + byte] = img;
                }
            }
        }
        Ok(Canonicalizer { n, chunks, images })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    fn image(&self, aut: usize, mask: u64) -> u64 {
        let base = aut * self.chunks * 256;
        let mut out = 0;
        for c in 0..self.chunks {
            let byte = (mask >> (8 * c) & 0xff) as usize;
            if byte != 0 {
                out |= self.images[base + c * 256 + byte];
            }
        }
        out
    }

    fn num_automorphisms(&self) -> usize {
        self.images.len() / (self.chunks * 256)
    }

    pub fn orbit(&self, s: SubsetMask) -> Vec<SubsetMask> {
        let mut out: Vec<SubsetMask> = (0..self.num_automorphisms())
            .map(|k| SubsetMask(self.image(k, s.bits())))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn canonical(&self, s: SubsetMask) -> SubsetMask {
        let m = (0..self.num_automorphisms())
            .map(|k| self.image(k, s.bits()))
            .min()
            .unwrap_or(s.bits());
        SubsetMask(m)
    }

    /// True when `s` is its own canonical form. Exits on the first smaller image.
    pub fn is_canonical(&self, s: SubsetMask) -> bool {
        (0..self.num_automorphisms()).all(|k| self.image(k, s.bits()) >= s.bits())
    }
}

/// Canonical representative of `s` under the automorphisms of `D_2n`.
pub fn dihedral_automorphism_images(n: u32, s: SubsetMask) -> Result<SubsetMask> {
    let canon = Canonicalizer::new(n)?;
    dihedral_group(n)?.check_mask(s)?;
    Ok(canon.canonical(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_singleton_is_fixed() {
        for n in 3..=10 {
            let s = SubsetMask::from_ids([ElementId::IDENTITY]);
            assert_eq!(dihedral_automorphism_images(n, s).unwrap(), s);
        }
    }

    #[test]
    fn d8_orbit_of_x_contains_xy() {
        let c = Canonicalizer::new(4).unwrap();
        let x = SubsetMask::from_ids([ElementId(4)]);
        let xy = SubsetMask::from_ids([ElementId(5)]);
        assert!(c.orbit(x).contains(&xy));
        assert_eq!(c.canonical(xy), x);
    }

    #[test]
    fn all_candidate_maps_are_automorphisms() {
        for n in 3..=16 {
            let g = dihedral_group(n).unwrap();
            let auts = dihedral_automorphisms(n);
            let phi_count = (1..n).filter(|&a| gcd(a as usize, n as usize) == 1).count();
            assert_eq!(auts.len(), phi_count * n as usize);
            for phi in auts {
                assert!(is_automorphism(&g, &|e| phi.apply_id(e, n)));
            }
        }
    }

    #[test]
    fn non_automorphism_detected() {
        let g = dihedral_group(4).unwrap();
        // swapping two rotations is a bijection but not a homomorphism
        let swap = |e: ElementId| match e.0 {
            1 => ElementId(2),
            2 => ElementId(1),
            _ => e,
        };
        assert!(!is_automorphism(&g, &swap));
    }

    #[test]
    fn canonical_is_idempotent_and_orbit_invariant() {
        let c = Canonicalizer::new(6).unwrap();
        for bits in [
            0b1u64,
            0b1010_0000_0110,
            0b1111_1100_0000,
            0xfff,
            0b1000_0000_0001,
        ] {
            let s = SubsetMask(bits);
            let k = c.canonical(s);
            assert_eq!(c.canonical(k), k);
            assert!(c.is_canonical(k));
            assert_eq!(k.len(), s.len());
            for t in c.orbit(s) {
                assert_eq!(c.canonical(t), k);
            }
        }
    }
}
