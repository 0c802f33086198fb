namespace curvkit {}
