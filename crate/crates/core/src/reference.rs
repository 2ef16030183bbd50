//! Reference dimensions of the bigraded pieces of the hat-lkv Lie algebra
//! for weights 1 to 127.
//!
//! Weights 1 and 2 are zero. Up to weight 29 every depth `1..=W` is known, with undisplayed entries
//! equal to zero. From weight 30 on only the listed low depths are known.
//! Weight 65 has no entry.

/// Largest weight for which every depth is known.
pub const COMPLETE_MAX_WEIGHT: usize = 29;

/// `(W, values for D = 1, 2, ...)`.
const ROWS: &[(usize, &[u64])] = &[
    (3, &[1]),
    (4, &[0]),
    (5, &[1]),
    (6, &[0]),
    (7, &[1]),
    (8, &[0, 1]),
    (9, &[1]),
    (10, &[0, 1]),
    (11, &[1, 0, 1]),
    (12, &[0, 1, 0, 1]),
    (13, &[1, 0, 2]),
    (14, &[0, 2, 0, 1]),
    (15, &[1, 0, 2, 0, 1]),
    (16, &[0, 2, 0, 3]),
    (17, &[1, 0, 4, 0, 2]),
    (18, &[0, 2, 0, 5, 0, 1]),
    (19, &[1, 0, 5, 0, 5]),
    (20, &[0, 3, 0, 7, 0, 3]),
    (21, &[1, 0, 6, 0, 9, 0, 1]),
    (22, &[0, 3, 0, 11, 0, 7]),
    (23, &[1, 0, 8, 0, 15, 0, 4]),
    (24, &[0, 3, 0, 16, 0, 14, 0, 1]),
    (25, &[1, 0, 10, 0, 23, 0, 11]),
    (26, &[0, 4, 0, 20, 0, 27, 0, 5]),
    (27, &[1, 0, 11, 0, 36, 0, 23, 0, 2]),
    (28, &[0, 4, 0, 27, 0, 45, 0, 16]),
    (29, &[1, 0, 14, 0, 50, 0, 48, 0, 7]),
    (30, &[0, 4, 0, 35, 0, 73, 0, 37, 0, 2]),
    (31, &[1, 0, 16, 0, 71, 0, 85, 0, 24]),
    (32, &[0, 5, 0, 43, 0, 113, 0, 79, 0]),
    (33, &[1, 0, 18, 0, 96, 0, 147, 0]),
    (34, &[0, 5, 0, 54, 0, 166, 0, 155]),
    (35, &[1, 0, 21, 0, 127, 0, 239, 0]),
    (36, &[0, 5, 0, 66, 0, 239, 0, 281]),
    (37, &[1, 0, 24, 0, 165, 0, 375]),
    (38, &[0, 6, 0, 78, 0, 336, 0]),
    (39, &[1, 0, 26, 0, 213, 0, 564]),
    (40, &[0, 6, 0, 94, 0, 458, 0]),
    (41, &[1, 0, 30, 0, 266, 0, 834]),
    (42, &[0, 6, 0, 111, 0, 615, 0]),
    (43, &[1, 0, 33, 0, 333, 0, 1190]),
    (44, &[0, 7, 0, 128, 0, 814]),
    (45, &[1, 0, 36, 0, 409, 0]),
    (46, &[0, 7, 0, 150, 0, 1055]),
    (47, &[1, 0, 40, 0, 498, 0]),
    (48, &[0, 7, 0, 173, 0, 1354]),
    (49, &[1, 0, 44, 0, 600, 0]),
    (50, &[0, 8, 0, 196, 0, 1717]),
    (51, &[1, 0, 47, 0, 720, 0]),
    (52, &[0, 8, 0, 224, 0, 2149]),
    (53, &[1, 0, 52, 0, 851, 0]),
    (54, &[0, 8, 0, 254, 0, 2666]),
    (55, &[1, 0, 56, 0, 1005, 0]),
    (56, &[0, 9, 0, 284, 0, 3281]),
    (57, &[1, 0, 60, 0, 1176, 0]),
    (58, &[0, 9, 0, 320, 0, 3994]),
    (59, &[1, 0, 65, 0, 1368, 0]),
    (60, &[0, 9, 0, 357, 0, 4834]),
    (61, &[1, 0, 70, 0, 1582]),
    (62, &[0, 10, 0, 395, 0]),
    (63, &[1, 0, 74, 0, 1824]),
    (64, &[0, 10, 0, 439, 0]),
    (66, &[0, 10, 0, 485, 0]),
    (67, &[1, 0, 85, 0, 2381]),
    (68, &[0, 11, 0, 531, 0]),
    (69, &[1, 0, 90, 0, 2703]),
    (70, &[0, 11, 0, 585, 0]),
    (71, &[1, 0, 96, 0, 3057]),
    (72, &[0, 11, 0, 640, 0]),
    (73, &[1, 0, 102, 0, 3444]),
    (74, &[0, 12, 0, 696, 0]),
    (75, &[1, 0, 107, 0, 3871]),
    (76, &[0, 12, 0, 759, 0]),
    (77, &[1, 0, 114, 0, 4328]),
    (78, &[0, 12, 0, 825, 0]),
    (79, &[1, 0, 120, 0, 4833]),
    (80, &[0, 13, 0, 891, 0]),
    (81, &[1, 0, 126, 0, 5376]),
    (82, &[0, 13, 0, 966, 0]),
    (83, &[1, 0, 133, 0, 5964]),
    (84, &[0, 13, 0, 1042, 0]),
    (85, &[1, 0, 140, 0, 6598]),
    (86, &[0, 14, 0, 1120]),
    (87, &[1, 0, 146, 0]),
    (88, &[0, 14, 0, 1206]),
    (89, &[1, 0, 154, 0]),
    (90, &[0, 14, 0, 1295]),
    (91, &[1, 0, 161, 0]),
    (92, &[0, 15, 0, 1384]),
    (93, &[1, 0, 168, 0]),
    (94, &[0, 15, 0, 1484]),
    (95, &[1, 0, 176, 0]),
    (96, &[0, 15, 0, 1585]),
    (97, &[1, 0, 184, 0]),
    (98, &[0, 16, 0, 1688]),
    (99, &[1, 0, 191, 0]),
    (100, &[0, 16, 0, 1800]),
    (101, &[1, 0, 200, 0]),
    (102, &[0, 16, 0, 1916]),
    (103, &[1, 0, 208, 0]),
    (104, &[0, 17, 0, 2032]),
    (105, &[1, 0, 216, 0]),
    (106, &[0, 17, 0, 2160]),
    (107, &[1, 0, 225, 0]),
    (108, &[0, 17, 0, 2289]),
    (109, &[1, 0, 234, 0]),
    (110, &[0, 18, 0, 2421]),
    (111, &[1, 0, 242, 0]),
    (112, &[0, 18, 0, 2563]),
    (113, &[1, 0, 252, 0]),
    (114, &[0, 18, 0, 2709]),
    (115, &[1, 0, 261, 0]),
    (116, &[0, 19, 0, 2855]),
    (117, &[1, 0, 270, 0]),
    (118, &[0, 19, 0, 3015]),
    (119, &[1, 0, 280, 0]),
    (120, &[0, 19, 0, 3176]),
    (121, &[1, 0, 290, 0]),
    (122, &[0, 20, 0, 3340]),
    (123, &[1, 0, 299, 0]),
    (124, &[0, 20, 0, 3515]),
    (125, &[1, 0, 310, 0]),
    (126, &[0, 20, 0, 3695]),
    (127, &[1, 0, 320, 0]),
];

/// The reference value at `(w, d)`, or `None` where the table has no entry.
pub fn value(w: usize, d: usize) -> Option<u64> {
    if d == 0 || d > w {
        return None;
    }
    if w < 3 {
        return Some(0);
    }
    let (_, vals) = ROWS.iter().find(|(rw, _)| *rw == w)?;
    match vals.get(d - 1) {
        Some(v) => Some(*v),
        None if w <= COMPLETE_MAX_WEIGHT && d <= w => Some(0),
        None => None,
    }
}

/// Every known cell `((W, D), value)` with `W ≤ max_weight`, in `(W, D)` order.
pub fn cells(max_weight: usize) -> Vec<((usize, usize), u64)> {
    let mut out = Vec::new();
    let weights = (1..3).chain(ROWS.iter().map(|(w, _)| *w));
    for w in weights.filter(|w| *w <= max_weight) {
        for d in 1..=w {
            match value(w, d) {
                Some(v) => out.push(((w, d), v)),
                None => break,
            }
        }
    }
    out
}

/// Largest depth known at weight `w`.
pub fn known_depth(w: usize) -> Option<usize> {
    (1..=w).take_while(|&d| value(w, d).is_some()).last()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups() {
        assert_eq!(value(3, 1), Some(1));
        assert_eq!(value(3, 2), Some(0));
        assert_eq!(value(12, 4), Some(1));
        assert_eq!(value(29, 9), Some(7));
        assert_eq!(value(29, 29), Some(0));
        assert_eq!(value(30, 10), Some(2));
        assert_eq!(value(30, 11), None);
        assert_eq!(value(65, 1), None);
        assert_eq!(value(127, 3), Some(320));
        assert_eq!(value(127, 5), None);
        assert_eq!(value(2, 1), Some(0));
        assert_eq!(value(2, 3), None);
        assert_eq!(known_depth(31), Some(9));
    }

    #[test]
    fn cell_counts() {
        let small = cells(11);
        assert_eq!(small.len(), (1..=11).sum::<usize>());
        assert!(cells(127).iter().all(|((w, d), _)| *d <= *w));
    }
}
