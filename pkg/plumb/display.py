# -*- coding: utf-8 -*-

"""Text and DOT renderings of divisors and reports."""

from plumb.graph import intersection_matrix


def _quote(text):
    return '"{0}"'.format(str(text).replace('\\', '\\\\').replace('"', '\\"'))


class DotDisplay(object):
    """
    Graphviz source for a decorated graph.

    Every edge is emitted on its own line, so parallel edges stay visible.
    """

    def __init__(self, name='divisor', indent='  '):
        self.name = name
        self.indent = indent

    def vertex_label(self, vertex):
        return 's={0}, g={1}'.format(vertex.self_intersection, vertex.genus)

    def render(self, graph, areas=None):
        lines = ['graph {0} {{'.format(_quote(self.name))]
        for vertex in graph.vertices:
            label = self.vertex_label(vertex)
            if areas is not None and vertex.id in areas:
                label += ', a={0}'.format(areas[vertex.id])
            lines.append('{0}{1} [label={2}];'.format(self.indent, _quote(vertex.id), _quote(label)))
        for eid, (u, v) in zip(graph.edge_ids, graph.edges):
            lines.append('{0}{1} -- {2} [id={3}];'.format(
                self.indent, _quote(u), _quote(v), _quote(eid)))
        lines.append('}')
        return '\n'.join(lines) + '\n'


class TextDisplay(object):
    """Plain text for terminals."""

    def __init__(self, width=4):
        self.width = width

    def graph(self, graph):
        lines = []
        for vertex, total in zip(graph.vertices, graph.degree_sums()):
            lines.append('{0}: g={1} s={2} s+d={3}'.format(
                vertex.id, vertex.genus, vertex.self_intersection, total))
        for eid, (u, v) in zip(graph.edge_ids, graph.edges):
            lines.append('{0}: {1} -- {2}'.format(eid, u, v))
        return '\n'.join(lines)

    def matrix(self, rows):
        fmt = '{0:>%d}' % self.width
        return '\n'.join(' '.join(fmt.format(x) for x in row) for row in rows)

    def intersection(self, graph):
        return self.matrix(intersection_matrix(graph).rows)

    def record(self, record, prefix=''):
        """Nested dicts and lists as indented `key: value` lines."""
        lines = []
        for key in sorted(record):
            value = record[key]
            if isinstance(value, dict):
                lines.append('{0}{1}:'.format(prefix, key))
                lines.append(self.record(value, prefix + '  '))
            elif isinstance(value, list) and value and isinstance(value[0], dict):
                lines.append('{0}{1}:'.format(prefix, key))
                for item in value:
                    lines.append(self.record(item, prefix + '  - '))
            else:
                lines.append('{0}{1}: {2}'.format(prefix, key, value))
        return '\n'.join(line for line in lines if line)
