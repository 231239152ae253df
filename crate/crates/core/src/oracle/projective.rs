//! Points and lines of projective space over `GF(p^2)`, and the Fermat
//! (Hermitian) hypersurfaces `sum x_i^{p+1} = 0` inside it.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, AddAssign};

use super::field::{Fp2, FqSquared};
use super::OracleError;

/// Homogeneous coordinates scaled so the first nonzero entry is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint(Vec<Fp2>);

impl ProjectivePoint {
    /// `None` for the zero vector.
    pub fn from_coords(field: &FqSquared, coords: &[Fp2]) -> Option<Self> {
        let lead = coords.iter().copied().find(|x| !x.is_zero())?;
        let scale = field.inverse(lead)?;
        Some(ProjectivePoint(
            coords.iter().map(|&x| field.mul(x, scale)).collect(),
        ))
    }

    pub fn coords(&self) -> &[Fp2] {
        &self.0
    }
}

/// Visits every point of `P^{k-1}(GF(p^2))` once, in canonical form.
pub fn for_each_projective_point(field: &FqSquared, k: usize, mut visit: impl FnMut(&[Fp2])) {
    let q = field.order();
    let mut coords = vec![Fp2::ZERO; k];
    for lead in 0..k {
        coords.iter_mut().for_each(|x| *x = Fp2::ZERO);
        coords[lead] = Fp2::ONE;
        let tail = k - lead - 1;
        let mut digits = vec![0u64; tail];
        loop {
            for (slot, &d) in coords[lead + 1..].iter_mut().zip(&digits) {
                *slot = field.from_index(d);
            }
            visit(&coords);
            if !advance(&mut digits, q) {
                break;
            }
        }
    }
}

/// Mixed-radix increment; `false` once every digit has wrapped.
fn advance(digits: &mut [u64], radix: u64) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

/// `|P^{k-1}(GF(p^2))|` by enumeration.
pub fn count_projective_points(field: &FqSquared, k: usize) -> u64 {
    let mut count = 0;
    if k > 0 {
        for_each_projective_point(field, k, |_| count += 1);
    }
    count
}

/// Precomputed `x -> x^{p+1}` for evaluating `sum x_i^{p+1}`.
#[derive(Clone, Debug)]
pub struct FermatForm {
    field: FqSquared,
    powers: Vec<Fp2>,
}

impl FermatForm {
    pub fn new(field: &FqSquared) -> Self {
        let exp = field.p() + 1;
        FermatForm {
            field: *field,
            powers: field.elements().map(|x| field.pow(x, exp)).collect(),
        }
    }

    pub fn field(&self) -> &FqSquared {
        &self.field
    }

    pub fn eval(&self, coords: &[Fp2]) -> Fp2 {
        coords.iter().fold(Fp2::ZERO, |acc, &x| {
            self.field
                .add(acc, self.powers[self.field.index(x) as usize])
        })
    }

    pub fn vanishes(&self, coords: &[Fp2]) -> bool {
        self.eval(coords).is_zero()
    }
}

/// The standard hermitian form `H(u, v) = sum u_i conj(v_i)`.
pub fn hermitian_form(field: &FqSquared, u: &[Fp2], v: &[Fp2]) -> Fp2 {
    u.iter().zip(v).fold(Fp2::ZERO, |acc, (&x, &y)| {
        field.add(acc, field.mul(x, field.conjugate(y)))
    })
}

/// Number of points of `P^{vars-1}(GF(p^2))` on `sum_{i<vars} x_i^{p+1} = 0`.
pub fn fermat_point_count(field: &FqSquared, vars: usize) -> Result<u64, OracleError> {
    if !(3..=4).contains(&vars) {
        return Err(OracleError::UnsupportedVars { vars });
    }
    let form = FermatForm::new(field);
    let mut count = 0;
    for_each_projective_point(field, vars, |x| {
        if form.vanishes(x) {
            count += 1;
        }
    });
    Ok(count)
}

/// A line of `P^3`, stored as the reduced row-echelon form of a 2x4 matrix
/// whose rows span it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectiveLine {
    rows: [[Fp2; 4]; 2],
}

impl ProjectiveLine {
    /// `None` if `u` and `v` are linearly dependent.
    pub fn from_span(field: &FqSquared, u: [Fp2; 4], v: [Fp2; 4]) -> Option<Self> {
        let mut rows = [u, v];
        let mut pivot_row = 0;
        for col in 0..4 {
            if pivot_row == 2 {
                break;
            }
            let Some(found) = (pivot_row..2).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(pivot_row, found);
            let scale = field.inverse(rows[pivot_row][col])?;
            for x in rows[pivot_row].iter_mut() {
                *x = field.mul(*x, scale);
            }
            let pivot = rows[pivot_row];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != pivot_row && !row[col].is_zero() {
                    let factor = row[col];
                    for (x, &y) in row.iter_mut().zip(&pivot) {
                        *x = field.sub(*x, field.mul(factor, y));
                    }
                }
            }
            pivot_row += 1;
        }
        (pivot_row == 2).then_some(ProjectiveLine { rows })
    }

    pub fn rows(&self) -> &[[Fp2; 4]; 2] {
        &self.rows
    }

    /// The `p^2 + 1` points of the line, in canonical form.
    pub fn points(&self, field: &FqSquared) -> Vec<ProjectivePoint> {
        let [u, v] = self.rows;
        let mut out = Vec::with_capacity(field.order() as usize + 1);
        out.extend(ProjectivePoint::from_coords(field, &u));
        for lambda in field.elements() {
            let w = combine(field, lambda, &u, &v);
            out.extend(ProjectivePoint::from_coords(field, &w));
        }
        out
    }

    pub fn contains(&self, field: &FqSquared, point: &ProjectivePoint) -> bool {
        let coords = point.coords();
        if coords.len() != 4 {
            return false;
        }
        let x = [coords[0], coords[1], coords[2], coords[3]];
        match ProjectiveLine::from_span(field, self.rows[0], x) {
            // x is a multiple of the first row
            None => true,
            Some(other) => other == *self,
        }
    }
}

fn combine(field: &FqSquared, lambda: Fp2, u: &[Fp2; 4], v: &[Fp2; 4]) -> [Fp2; 4] {
    let mut w = *v;
    for (x, &y) in w.iter_mut().zip(u) {
        *x = field.add(*x, field.mul(lambda, y));
    }
    w
}

/// Visits every line of `P^3(GF(p^2))` once, by generating each reduced
/// row-echelon form directly: pivot columns `c1 < c2`, free entries to the
/// right of each pivot except in the other pivot column.
pub fn for_each_line(field: &FqSquared, mut visit: impl FnMut(&ProjectiveLine)) {
    let q = field.order();
    for c1 in 0..4 {
        for c2 in c1 + 1..4 {
            let free: Vec<(usize, usize)> = (c1 + 1..4)
                .filter(|&c| c != c2)
                .map(|c| (0, c))
                .chain((c2 + 1..4).map(|c| (1, c)))
                .collect();
            let mut rows = [[Fp2::ZERO; 4]; 2];
            rows[0][c1] = Fp2::ONE;
            rows[1][c2] = Fp2::ONE;
            let mut digits = vec![0u64; free.len()];
            loop {
                for (&(r, c), &d) in free.iter().zip(&digits) {
                    rows[r][c] = field.from_index(d);
                }
                visit(&ProjectiveLine { rows });
                if !advance(&mut digits, q) {
                    break;
                }
            }
        }
    }
}

/// Tallies from a sweep over the lines of `P^3(GF(p^2))`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LineCensus {
    pub lines_examined: u64,
    /// Lines all of whose points satisfy the Fermat surface equation.
    pub lines_on_surface: u64,
    /// Sum over counted lines of their distinct canonical points, each
    /// re-checked on the surface.
    pub incidences: u64,
    /// The counted lines themselves, when collection was requested.
    pub collected: Vec<ProjectiveLine>,
}

impl Add for LineCensus {
    type Output = LineCensus;

    fn add(mut self, rhs: LineCensus) -> LineCensus {
        self += rhs;
        self
    }
}

impl AddAssign for LineCensus {
    fn add_assign(&mut self, rhs: LineCensus) {
        self.lines_examined += rhs.lines_examined;
        self.lines_on_surface += rhs.lines_on_surface;
        self.incidences += rhs.incidences;
        self.collected.extend(rhs.collected);
    }
}

/// Sweeps the lines whose enumeration index is congruent to `part` modulo
/// `parts`. Summing the censuses of all parts gives the full census.
pub fn line_census_part(form: &FermatForm, part: u64, parts: u64, collect: bool) -> LineCensus {
    let field = *form.field();
    let mut census = LineCensus::default();
    let mut index = 0u64;
    for_each_line(&field, |line| {
        let mine = index % parts == part;
        index += 1;
        if !mine {
            return;
        }
        census.lines_examined += 1;
        let [u, v] = line.rows;
        if !form.vanishes(&u) {
            return;
        }
        for lambda in field.elements() {
            if !form.vanishes(&combine(&field, lambda, &u, &v)) {
                return;
            }
        }
        census.lines_on_surface += 1;
        let mut points = line.points(&field);
        points.sort();
        points.dedup();
        census.incidences += points
            .iter()
            .filter(|pt| form.vanishes(pt.coords()))
            .count() as u64;
        if collect {
            census.collected.push(*line);
        }
    });
    census
}

pub fn line_census(field: &FqSquared, collect: bool) -> LineCensus {
    line_census_part(&FermatForm::new(field), 0, 1, collect)
}

/// Number of lines of `P^3(GF(p^2))` contained in the Fermat surface.
pub fn lines_on_fermat_surface(field: &FqSquared) -> u64 {
    line_census(field, false).lines_on_surface
}
