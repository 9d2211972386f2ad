use crate::error::{Error, Result};
use crate::language::{ElementOrder, Language, MemberSet};
use crate::pairing::{pair_encode, point_decode, point_encode, zigzag};
use crate::program::RectBounds;
use crate::Example;

/// Axis-parallel rectangles inside the grid `[-g, g] x [-g, g]`, with
/// points coded as `<zigzag(x), zigzag(y)>` and ordered radially.
///
/// The whole grid is the distinguished universal member. Every code in
/// `[0, B]` that decodes to an off-grid point is outside every member.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RectangleFamily {
    grid: i64,
}

struct RectSet(RectBounds);

impl MemberSet for RectSet {
    fn contains(&self, code: Example) -> bool {
        let (x, y) = point_decode(code);
        self.0.contains(x, y)
    }

    fn members_upto(&self, bound: Example) -> Vec<Example> {
        let r = self.0;
        let mut out: Vec<Example> = (r.x_lo..=r.x_hi)
            .flat_map(|x| (r.y_lo..=r.y_hi).map(move |y| point_encode(x, y)))
            .filter_map(|c| c.ok())
            .filter(|&c| c <= bound)
            .collect();
        out.sort_unstable();
        out
    }
}

impl RectangleFamily {
    pub const DEFAULT_GRID: i64 = 32;

    pub fn new(grid: i64) -> Result<Self> {
        if !(0..=1 << 20).contains(&grid) {
            return Err(Error::InvalidRectangle(format!(
                "grid bound {grid} must lie in 0..=2^20"
            )));
        }
        Ok(RectangleFamily { grid })
    }

    pub fn grid(&self) -> i64 {
        self.grid
    }

    /// Largest code of a grid point.
    pub fn universe_bound(&self) -> Example {
        let top = zigzag(self.grid).max(zigzag(-self.grid));
        pair_encode(top, top).expect("grid bound keeps codes small")
    }

    pub fn universal(&self) -> RectBounds {
        RectBounds::new(-self.grid, self.grid, -self.grid, self.grid)
    }

    pub fn template(&self, bounds: &RectBounds, code: Example) -> bool {
        let (x, y) = point_decode(code);
        bounds.contains(x, y)
    }

    pub fn validate(&self, b: &RectBounds) -> Result<()> {
        if !b.is_proper() {
            return Err(Error::InvalidRectangle(format!("inverted bounds {b}")));
        }
        let g = self.grid;
        if b.x_lo < -g || b.x_hi > g || b.y_lo < -g || b.y_hi > g {
            return Err(Error::InvalidRectangle(format!(
                "{b} leaves the grid [-{g},{g}]^2"
            )));
        }
        Ok(())
    }

    pub fn rectangle_language(&self, bounds: RectBounds) -> Result<Language> {
        self.validate(&bounds)?;
        Ok(Language::new(
            format!("rect{bounds}"),
            self.universe_bound(),
            ElementOrder::Radial,
            RectSet(bounds),
        ))
    }

    /// Every grid point, row by row.
    pub fn grid_points(&self) -> impl Iterator<Item = (i64, i64)> {
        let g = self.grid;
        (-g..=g).flat_map(move |x| (-g..=g).map(move |y| (x, y)))
    }
}

impl Default for RectangleFamily {
    fn default() -> Self {
        RectangleFamily {
            grid: Self::DEFAULT_GRID,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_square_membership() {
        let f = RectangleFamily::default();
        let target = f.rectangle_language(RectBounds::new(-1, 1, -1, 1)).unwrap();
        assert!(target.contains(point_encode(0, 0).unwrap()));
        assert!(!target.contains(point_encode(0, 2).unwrap()));
        assert_eq!(target.members().len(), 9);
        let dot = f.rectangle_language(RectBounds::point(0, 0)).unwrap();
        assert_eq!(dot.members(), vec![0]);
    }

    #[test]
    fn rejects_bad_bounds() {
        let f = RectangleFamily::default();
        assert!(matches!(
            f.rectangle_language(RectBounds::new(1, -1, 0, 0)),
            Err(Error::InvalidRectangle(_))
        ));
        assert!(matches!(
            f.rectangle_language(RectBounds::new(0, 33, 0, 0)),
            Err(Error::InvalidRectangle(_))
        ));
    }

    #[test]
    fn bound_covers_the_grid() {
        let f = RectangleFamily::default();
        assert_eq!(f.universe_bound(), 8320);
        let max = f
            .grid_points()
            .map(|(x, y)| point_encode(x, y).unwrap())
            .max()
            .unwrap();
        assert_eq!(max, f.universe_bound());
    }

    #[test]
    fn membership_matches_inequalities_on_the_grid() {
        let f = RectangleFamily::new(6).unwrap();
        let b = RectBounds::new(-2, 3, -4, 1);
        let l = f.rectangle_language(b).unwrap();
        for (x, y) in f.grid_points() {
            let expected = (-2..=3).contains(&x) && (-4..=1).contains(&y);
            assert_eq!(
                l.contains(point_encode(x, y).unwrap()),
                expected,
                "({x},{y})"
            );
        }
        let scanned: Vec<_> = (0..=l.universe_bound())
            .filter(|&c| l.contains(c))
            .collect();
        assert_eq!(l.members(), scanned);
    }
}
