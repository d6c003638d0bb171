use crate::{Error, Result};

/// A finite field `GF(p)` or `GF(p²)` given by tables. Elements are encoded
/// as `a + b·p` for `a + b·α`, where `α² = d` and `d` is the least quadratic
/// non-residue mod `p` (so `x² − d` is the irreducible polynomial used).
#[derive(Clone, Debug)]
pub struct Gf {
    p: usize,
    degree: usize,
    d: Option<usize>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|i| i * i <= p).all(|i| !p.is_multiple_of(i))
}

impl Gf {
    /// Builds the tables and checks the field axioms exhaustively.
    pub fn new(p: usize, degree: usize) -> Result<Self> {
        if !is_prime(p) || p > 13 {
            return Err(Error::Precondition(format!("p = {p} must be a prime at most 13")));
        }
        let (q, d) = match degree {
            1 => (p, None),
            2 => {
                if p == 2 {
                    return Err(Error::Precondition("GF(4) has no irreducible x² − d".into()));
                }
                let squares: Vec<usize> = (1..p).map(|x| x * x % p).collect();
                let d = (2..p).find(|d| !squares.contains(d)).expect("odd p has non-residues");
                (p * p, Some(d))
            }
            _ => return Err(Error::Precondition(format!("degree {degree} not supported"))),
        };
        let split = |x: usize| (x % p, x / p);
        let join = |a: usize, b: usize| a % p + (b % p) * p;
        let mut add = vec![vec![0; q]; q];
        let mut mul = vec![vec![0; q]; q];
        for x in 0..q {
            for y in 0..q {
                let (a, b) = split(x);
                let (c, e) = split(y);
                add[x][y] = join(a + c, b + e);
                let dd = d.unwrap_or(0);
                mul[x][y] = join(a * c + b * e * dd, a * e + b * c);
            }
        }
        let f = Gf { p, degree, d, add, mul };
        f.check_axioms()?;
        Ok(f)
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The non-residue `d` with `α² = d`, for degree 2.
    pub fn nonresidue(&self) -> Option<usize> {
        self.d
    }

    pub fn order(&self) -> usize {
        self.add.len()
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x][y]
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x][y]
    }

    pub fn neg(&self, x: usize) -> usize {
        (0..self.order()).find(|&y| self.add[x][y] == 0).expect("additive inverse")
    }

    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    pub fn inv(&self, x: usize) -> Option<usize> {
        (1..self.order()).find(|&y| self.mul[x][y] == 1)
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, x: usize) -> usize {
        assert!(x != 0);
        let (mut y, mut k) = (x, 1);
        while y != 1 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// The least element generating the multiplicative group.
    pub fn primitive_element(&self) -> usize {
        (1..self.order()).find(|&x| self.mult_order(x) == self.order() - 1).expect("cyclic")
    }

    pub fn is_square(&self, x: usize) -> bool {
        (0..self.order()).any(|y| self.mul(y, y) == x)
    }

    /// Embedding of `GF(p)` (elements `0..p`).
    pub fn prime_field(&self) -> std::ops::Range<usize> {
        0..self.p
    }

    fn check_axioms(&self) -> Result<()> {
        let q = self.order();
        let fail = |what: &str| Err(Error::Precondition(format!("field axiom fails: {what}")));
        for x in 0..q {
            if self.add[x][0] != x || self.mul[x][1] != x {
                return fail("identity");
            }
            if x != 0 && self.inv(x).is_none() {
                return fail("inverse");
            }
            for y in 0..q {
                if self.add[x][y] != self.add[y][x] || self.mul[x][y] != self.mul[y][x] {
                    return fail("commutativity");
                }
                for z in 0..q {
                    if self.add[self.add[x][y]][z] != self.add[x][self.add[y][z]]
                        || self.mul[self.mul[x][y]][z] != self.mul[x][self.mul[y][z]]
                    {
                        return fail("associativity");
                    }
                    if self.mul[x][self.add[y][z]] != self.add[self.mul[x][y]][self.mul[x][z]] {
                        return fail("distributivity");
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fields() {
        for p in [2, 3, 5, 7] {
            let f = Gf::new(p, 1).unwrap();
            assert_eq!(f.order(), p);
            assert_eq!(f.mult_order(f.primitive_element()), p - 1);
        }
        for p in [3, 5, 7] {
            let f = Gf::new(p, 2).unwrap();
            assert_eq!(f.order(), p * p);
            // every element of the prime field is a square in GF(p²)
            assert!(f.prime_field().all(|x| f.is_square(x)));
            assert_eq!((1..f.order()).filter(|&x| f.is_square(x)).count(), (p * p - 1) / 2);
        }
        assert_eq!(Gf::new(3, 2).unwrap().nonresidue(), Some(2));
        assert_eq!(Gf::new(7, 2).unwrap().nonresidue(), Some(3));
        assert!(Gf::new(4, 1).is_err());
        assert!(Gf::new(2, 2).is_err());
    }
}
