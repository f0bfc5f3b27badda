# Example settings module for `plumb --conf`.

PLUMB = {
    'namespace': 'plumb.plugins',
    'gs_policy': 'floor',
    'openbook_policy': 'leading',
    'max_states': 5000,
}
