//! Zero-contour extraction on a rectangular window by marching squares with
//! linear interpolation, and a minimal SVG polyline emitter.

/// Axis-aligned window `(x0, y0, x1, y1)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Window {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl Window {
    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64) -> Self {
        Window { x0, y0, x1, y1 }
    }
}

type Pt = (f64, f64);

fn interp(a: Pt, va: f64, b: Pt, vb: f64) -> Pt {
    let t = if (vb - va).abs() > 1e-300 {
        (-va / (vb - va)).clamp(0.0, 1.0)
    } else {
        0.5
    };
    (a.0 + t * (b.0 - a.0), a.1 + t * (b.1 - a.1))
}

/// Level-zero contours of `field` sampled on an `n x n` grid over the
/// window; returns chained polylines in plane coordinates.
pub fn marching_squares<F>(field: F, window: Window, n: usize) -> Vec<Vec<Pt>>
where
    F: Fn(f64, f64) -> f64,
{
    let n = n.max(2);
    let dx = (window.x1 - window.x0) / n as f64;
    let dy = (window.y1 - window.y0) / n as f64;
    let xs: Vec<f64> = (0..=n).map(|i| window.x0 + i as f64 * dx).collect();
    let ys: Vec<f64> = (0..=n).map(|j| window.y0 + j as f64 * dy).collect();
    let grid: Vec<Vec<f64>> = ys
        .iter()
        .map(|&y| xs.iter().map(|&x| field(x, y)).collect())
        .collect();

    let mut segments: Vec<(Pt, Pt)> = Vec::new();
    for j in 0..n {
        for i in 0..n {
            let p00 = (xs[i], ys[j]);
            let p10 = (xs[i + 1], ys[j]);
            let p01 = (xs[i], ys[j + 1]);
            let p11 = (xs[i + 1], ys[j + 1]);
            let v00 = grid[j][i];
            let v10 = grid[j][i + 1];
            let v01 = grid[j + 1][i];
            let v11 = grid[j + 1][i + 1];
            let mut case = 0u8;
            if v00 > 0.0 {
                case |= 1;
            }
            if v10 > 0.0 {
                case |= 2;
            }
            if v11 > 0.0 {
                case |= 4;
            }
            if v01 > 0.0 {
                case |= 8;
            }
            // edge crossings
            let bottom = || interp(p00, v00, p10, v10);
            let top = || interp(p01, v01, p11, v11);
            let left = || interp(p00, v00, p01, v01);
            let right = || interp(p10, v10, p11, v11);
            match case {
                0 | 15 => {}
                1 | 14 => segments.push((left(), bottom())),
                2 | 13 => segments.push((bottom(), right())),
                3 | 12 => segments.push((left(), right())),
                4 | 11 => segments.push((right(), top())),
                6 | 9 => segments.push((bottom(), top())),
                7 | 8 => segments.push((left(), top())),
                5 | 10 => {
                    // saddle: disambiguate with the cell-centre sign
                    let centre = (v00 + v10 + v01 + v11) * 0.25;
                    let flip = (case == 5) == (centre > 0.0);
                    if flip {
                        segments.push((left(), bottom()));
                        segments.push((right(), top()));
                    } else {
                        segments.push((left(), top()));
                        segments.push((bottom(), right()));
                    }
                }
                _ => unreachable!(),
            }
        }
    }
    chain_segments(segments, dx.min(dy) * 1e-6)
}

fn key(p: Pt, eps: f64) -> (i64, i64) {
    ((p.0 / eps).round() as i64, (p.1 / eps).round() as i64)
}

fn chain_segments(segments: Vec<(Pt, Pt)>, eps: f64) -> Vec<Vec<Pt>> {
    use std::collections::HashMap;
    let mut adj: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for (idx, (a, b)) in segments.iter().enumerate() {
        adj.entry(key(*a, eps)).or_default().push(idx);
        adj.entry(key(*b, eps)).or_default().push(idx);
    }
    let mut used = vec![false; segments.len()];
    let mut out = Vec::new();
    for start in 0..segments.len() {
        if used[start] {
            continue;
        }
        used[start] = true;
        let (a, b) = segments[start];
        let mut line = vec![a, b];
        // extend forward then backward
        for _ in 0..2 {
            loop {
                let end = *line.last().unwrap();
                let mut found = None;
                if let Some(cands) = adj.get(&key(end, eps)) {
                    for &c in cands {
                        if !used[c] {
                            found = Some(c);
                            break;
                        }
                    }
                }
                match found {
                    Some(c) => {
                        used[c] = true;
                        let (ca, cb) = segments[c];
                        if key(ca, eps) == key(end, eps) {
                            line.push(cb);
                        } else {
                            line.push(ca);
                        }
                    }
                    None => break,
                }
            }
            line.reverse();
        }
        out.push(line);
    }
    out
}

/// Renders polylines as a standalone SVG document mapping the window onto a
/// square canvas.
pub fn svg_document(polylines: &[Vec<Pt>], window: Window, canvas: u32) -> String {
    let w = canvas.max(16) as f64;
    let sx = w / (window.x1 - window.x0);
    let sy = w / (window.y1 - window.y0);
    let mut doc = String::new();
    doc.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{c}\" height=\"{c}\" viewBox=\"0 0 {c} {c}\">\n",
        c = canvas.max(16)
    ));
    doc.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    for line in polylines {
        if line.len() < 2 {
            continue;
        }
        let pts: Vec<String> = line
            .iter()
            .map(|&(x, y)| {
                // flip y so the plane's upward direction points up on screen
                format!(
                    "{:.3},{:.3}",
                    (x - window.x0) * sx,
                    w - (y - window.y0) * sy
                )
            })
            .collect();
        doc.push_str(&format!(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n",
            pts.join(" ")
        ));
    }
    doc.push_str("</svg>\n");
    doc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_contour() {
        let w = Window::new(-2.0, -2.0, 2.0, 2.0);
        let lines = marching_squares(|x, y| x * x + y * y - 1.0, w, 128);
        assert!(!lines.is_empty());
        let total: usize = lines.iter().map(|l| l.len()).sum();
        assert!(total > 100);
        for line in &lines {
            for &(x, y) in line {
                let r = (x * x + y * y).sqrt();
                assert!((r - 1.0).abs() < 0.01, "point off the circle: {r}");
            }
        }
        // the main contour should close up
        let longest = lines.iter().max_by_key(|l| l.len()).unwrap();
        let first = longest.first().unwrap();
        let last = longest.last().unwrap();
        let gap = ((first.0 - last.0).powi(2) + (first.1 - last.1).powi(2)).sqrt();
        assert!(gap < 0.1, "open contour, gap {gap}");
    }

    #[test]
    fn empty_field_has_no_contours() {
        let w = Window::new(0.0, 0.0, 1.0, 1.0);
        let lines = marching_squares(|_, _| 1.0, w, 32);
        assert!(lines.is_empty());
    }

    #[test]
    fn svg_smoke() {
        let w = Window::new(-1.0, -1.0, 1.0, 1.0);
        let lines = marching_squares(|x, y| x * x + y * y - 0.25, w, 64);
        let svg = svg_document(&lines, w, 256);
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("polyline"));
        assert!(svg.ends_with("</svg>\n"));
    }
}
