use serde::{Deserialize, Serialize};

use super::{RawRect, RectError, Rectangulation};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RectJson {
    label: usize,
    x1: i64,
    y1: i64,
    x2: i64,
    y2: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RectangulationJson {
    n: usize,
    rects: Vec<RectJson>,
}

impl Rectangulation {
    /// `{"n": .., "rects": [{"label", "x1", "y1", "x2", "y2"}, ..]}` with
    /// rectangles in label order.
    pub fn to_json(&self) -> String {
        let doc = RectangulationJson {
            n: self.n(),
            rects: self
                .rects()
                .iter()
                .map(|r| RectJson {
                    label: r.label,
                    x1: r.x_left as i64,
                    y1: r.y_top as i64,
                    x2: r.x_right as i64,
                    y2: r.y_bottom as i64,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("plain data serializes")
    }

    /// Parses and revalidates; labels must agree with the NW-SE order of
    /// the geometry.
    pub fn from_json(text: &str) -> Result<Self, RectError> {
        let doc: RectangulationJson =
            serde_json::from_str(text).map_err(|e| RectError::Json { line: e.line(), message: e.to_string() })?;
        if doc.n != doc.rects.len() {
            return Err(RectError::SizeMismatch { given: doc.n, actual: doc.rects.len() });
        }
        let raw: Vec<_> = doc.rects.iter().map(|r| RawRect::new(r.x1, r.y1, r.x2, r.y2)).collect();
        let (rect, labels) = Rectangulation::from_rects_with_labels(&raw)?;
        for (index, (given, expected)) in doc.rects.iter().map(|r| r.label).zip(labels).enumerate() {
            if given != expected {
                return Err(RectError::LabelMismatch { index: index + 1, given, expected });
            }
        }
        Ok(rect)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let r = Rectangulation::vertical_strips(3);
        assert_eq!(Rectangulation::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn wrong_labels_rejected() {
        let text = r#"{"n": 2, "rects": [
            {"label": 2, "x1": 0, "y1": 0, "x2": 1, "y2": 1},
            {"label": 1, "x1": 1, "y1": 0, "x2": 2, "y2": 1}]}"#;
        assert_eq!(Rectangulation::from_json(text), Err(RectError::LabelMismatch { index: 1, given: 2, expected: 1 }));
    }

    #[test]
    fn malformed_json_reports_line() {
        let text = "{\n\"n\": 1,\n\"rects\": [ oops ]\n}";
        match Rectangulation::from_json(text) {
            Err(RectError::Json { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn size_field_checked() {
        let text = r#"{"n": 2, "rects": [{"label": 1, "x1": 0, "y1": 0, "x2": 1, "y2": 1}]}"#;
        assert!(matches!(Rectangulation::from_json(text), Err(RectError::SizeMismatch { .. })));
    }
}
