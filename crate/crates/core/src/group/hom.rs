use std::collections::VecDeque;

use super::{Elem, Subgroup};
use crate::error::{Error, Result};

/// A homomorphism between subgroups, stored as an image table indexed by
/// position in the source.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: Subgroup,
    target: Subgroup,
    images: Vec<Elem>,
}

impl GroupHom {
    pub(crate) fn from_images_unchecked(source: &Subgroup, target: &Subgroup, images: Vec<Elem>) -> GroupHom {
        debug_assert_eq!(images.len(), source.order());
        GroupHom { source: source.clone(), target: target.clone(), images }
    }

    /// `images[i]` is the image of the `i`-th element of `source`.
    pub fn from_images(source: &Subgroup, target: &Subgroup, images: Vec<Elem>) -> Result<GroupHom> {
        if images.len() != source.order() {
            return Err(Error::Homomorphism(format!(
                "{} images for a source of order {}",
                images.len(),
                source.order()
            )));
        }
        let h = Self::from_images_unchecked(source, target, images);
        h.check()?;
        Ok(h)
    }

    /// Extends an assignment on generators; fails if it does not define a homomorphism.
    pub fn from_generator_images(source: &Subgroup, target: &Subgroup, assignment: &[(Elem, Elem)]) -> Result<GroupHom> {
        let s_amb = source.ambient();
        let t_amb = target.ambient();
        for &(g, x) in assignment {
            if !source.contains(g) || !target.contains(x) {
                return Err(Error::Homomorphism("generator or image outside its group".into()));
            }
        }
        let mut images: Vec<Option<Elem>> = vec![None; source.order()];
        let id_pos = source.position(s_amb.identity()).unwrap();
        images[id_pos] = Some(t_amb.identity());
        let mut queue = VecDeque::from([s_amb.identity()]);
        while let Some(x) = queue.pop_front() {
            let fx = images[source.position(x).unwrap()].unwrap();
            for &(g, fg) in assignment {
                let y = s_amb.mul(x, g);
                let fy = t_amb.mul(fx, fg);
                let py = source.position(y).unwrap();
                match images[py] {
                    None => {
                        images[py] = Some(fy);
                        queue.push_back(y);
                    }
                    Some(old) if old != fy => {
                        return Err(Error::Homomorphism(format!(
                            "generator images are inconsistent at {}",
                            s_amb.label(y)
                        )))
                    }
                    _ => {}
                }
            }
        }
        let images: Option<Vec<Elem>> = images.into_iter().collect();
        let images = images.ok_or_else(|| Error::Homomorphism("listed elements do not generate the source".into()))?;
        Ok(Self::from_images_unchecked(source, target, images))
    }

    pub fn identity(s: &Subgroup) -> GroupHom {
        Self::from_images_unchecked(s, s, s.elements().to_vec())
    }

    pub fn source(&self) -> &Subgroup {
        &self.source
    }

    pub fn target(&self) -> &Subgroup {
        &self.target
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, e: Elem) -> Elem {
        self.images[self.source.position(e).expect("argument in source")]
    }

    pub fn try_apply(&self, e: Elem) -> Option<Elem> {
        self.source.position(e).map(|p| self.images[p])
    }

    /// Multiplicativity, checked against generators of the source.
    pub fn check(&self) -> Result<()> {
        let s_amb = self.source.ambient();
        let t_amb = self.target.ambient();
        if let Some(&bad) = self.images.iter().find(|&&y| !self.target.contains(y)) {
            return Err(Error::Homomorphism(format!("image {} outside target", t_amb.label(bad))));
        }
        for &g in self.source.generators() {
            let fg = self.apply(g);
            for (i, &x) in self.source.elements().iter().enumerate() {
                if self.apply(s_amb.mul(x, g)) != t_amb.mul(self.images[i], fg) {
                    return Err(Error::Homomorphism(format!(
                        "not multiplicative at ({}, {})",
                        s_amb.label(x),
                        s_amb.label(g)
                    )));
                }
            }
        }
        if self.apply(s_amb.identity()) != t_amb.identity() {
            return Err(Error::Homomorphism("identity not preserved".into()));
        }
        Ok(())
    }

    pub fn kernel(&self) -> Subgroup {
        let id = self.target.ambient().identity();
        let elems = self
            .source
            .elements()
            .iter()
            .zip(&self.images)
            .filter(|(_, &y)| y == id)
            .map(|(&x, _)| x)
            .collect();
        Subgroup::from_elements_unchecked(self.source.ambient(), elems)
    }

    pub fn image(&self) -> Subgroup {
        Subgroup::from_elements_unchecked(self.target.ambient(), self.images.clone())
    }

    /// Image of a subgroup of the source.
    pub fn image_of(&self, s: &Subgroup) -> Subgroup {
        Subgroup::from_elements_unchecked(self.target.ambient(), s.elements().iter().map(|&x| self.apply(x)).collect())
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.source.order() == self.target.order()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupHom) -> Result<GroupHom> {
        if self.target.ambient().key() != other.source.ambient().key() || !self.image().is_subgroup_of(&other.source) {
            return Err(Error::Homomorphism("composition: image not inside the next source".into()));
        }
        let images = self.images.iter().map(|&y| other.apply(y)).collect();
        Ok(Self::from_images_unchecked(&self.source, &other.target, images))
    }

    pub fn inverse(&self) -> Result<GroupHom> {
        if !self.is_isomorphism() {
            return Err(Error::Homomorphism("inverse of a non-isomorphism".into()));
        }
        let mut images = vec![0; self.target.order()];
        for (i, &y) in self.images.iter().enumerate() {
            images[self.target.position(y).unwrap()] = self.source.elements()[i];
        }
        Ok(Self::from_images_unchecked(&self.target, &self.source, images))
    }

    /// Restriction to a subgroup of the source, with a subgroup of the target
    /// containing the image as new codomain.
    pub fn restrict(&self, s: &Subgroup, codomain: &Subgroup) -> Result<GroupHom> {
        if !s.is_subgroup_of(&self.source) {
            return Err(Error::Homomorphism("restriction to a non-subgroup".into()));
        }
        let images: Vec<Elem> = s.elements().iter().map(|&x| self.apply(x)).collect();
        if images.iter().any(|&y| !codomain.contains(y)) {
            return Err(Error::Homomorphism("restricted image leaves codomain".into()));
        }
        Ok(Self::from_images_unchecked(s, codomain, images))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric, Permutation};

    #[test]
    fn sign_homomorphism_of_s3() {
        let s3 = symmetric(3);
        let c2 = cyclic(2);
        let src = Subgroup::full(&s3);
        let tgt = Subgroup::full(&c2);
        let t = s3.find_permutation(&"(1,2)".parse::<Permutation>().unwrap()).unwrap();
        let c = s3.find_permutation(&"(1,2,3)".parse::<Permutation>().unwrap()).unwrap();
        let gen_c2 = 1 - c2.identity();
        let sign = GroupHom::from_generator_images(&src, &tgt, &[(t, gen_c2), (c, c2.identity())]).unwrap();
        assert_eq!(sign.kernel().order(), 3);
        assert_eq!(sign.image().order(), 2);
        assert!(GroupHom::from_generator_images(&src, &tgt, &[(t, c2.identity()), (c, gen_c2)]).is_err());
    }

    #[test]
    fn inverse_and_composition() {
        let c3 = cyclic(3);
        let s = Subgroup::full(&c3);
        let g = 1;
        let inv = GroupHom::from_generator_images(&s, &s, &[(g, c3.inv(g))]).unwrap();
        assert!(inv.is_isomorphism());
        let id = inv.then(&inv).unwrap();
        for x in c3.elements() {
            assert_eq!(id.apply(x), x);
            assert_eq!(inv.inverse().unwrap().apply(inv.apply(x)), x);
        }
        let bad = GroupHom::from_images(&s, &s, vec![0, 1, 1]);
        assert!(bad.is_err());
    }
}
