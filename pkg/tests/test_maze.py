import random

import pytest

from puzzletext.maze import (
    DOWN,
    EAST,
    LEFT,
    NORTH,
    RIGHT,
    SOUTH,
    UP,
    WEST,
    DanglingPathError,
    Maze,
    MazeGeometryError,
    MazeSizeError,
    MazeTokenError,
    InvalidPathError,
    generate_maze,
    parse_maze,
    path_prefix_length,
    render_maze,
    solve_maze,
    validate_path,
)


def open_internal_edges(maze):
    """(cell, cell) pairs with no wall between them, each edge once."""
    edges = []
    for y in range(maze.height):
        for x in range(maze.width):
            if x + 1 < maze.width and not maze.walls[y][x] & EAST:
                edges.append(((x, y), (x + 1, y)))
            if y + 1 < maze.height and not maze.walls[y][x] & SOUTH:
                edges.append(((x, y), (x, y + 1)))
    return edges


def is_spanning_tree(maze):
    """Union-find check: connected and exactly n-1 open internal edges."""
    parent = {(x, y): (x, y) for y in range(maze.height) for x in range(maze.width)}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    edges = open_internal_edges(maze)
    merged = 0
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False  # cycle
        parent[ra] = rb
        merged += 1
    n = maze.width * maze.height
    return merged == n - 1 and len(edges) == n - 1


def all_simple_path_lengths(maze):
    """Exhaustive enumeration of simple entry-to-exit paths."""
    adjacency = {}
    for a, b in open_internal_edges(maze):
        adjacency.setdefault(a, []).append(b)
        adjacency.setdefault(b, []).append(a)
    lengths = []

    def walk(cell, seen, steps):
        if cell == maze.exit:
            lengths.append(steps)
            return
        for nxt in adjacency.get(cell, ()):
            if nxt not in seen:
                walk(nxt, seen | {nxt}, steps + 1)

    walk(maze.entry, {maze.entry}, 0)
    return lengths


def corridor_maze(length):
    """Hand-built 1-cell-wide vertical corridor of `length` cells."""
    walls = []
    for y in range(length):
        mask = EAST | WEST
        if y == 0:
            mask |= NORTH
        if y == length - 1:
            pass  # south opening is the exit
        else:
            pass
        walls.append((mask,))
    return Maze(1, length, tuple(walls))


# --- generation ---


def test_generated_mazes_are_perfect():
    for seed in range(50):
        for size in ((4, 4), (5, 5), (6, 6), (3, 6)):
            assert is_spanning_tree(generate_maze(seed, *size))


def test_generation_deterministic():
    assert generate_maze(7, 4, 4) == generate_maze(7, 4, 4)


def test_two_by_two_has_three_open_edges():
    maze = generate_maze(1, 2, 2)
    assert len(open_internal_edges(maze)) == 3


def test_size_errors():
    with pytest.raises(MazeSizeError):
        generate_maze(1, 1, 4)
    with pytest.raises(MazeSizeError):
        generate_maze(1, 4, 0)


def test_wall_symmetry():
    for seed in range(20):
        maze = generate_maze(seed, 5, 5)
        for y in range(maze.height):
            for x in range(maze.width):
                if x + 1 < maze.width:
                    east = bool(maze.walls[y][x] & EAST)
                    west = bool(maze.walls[y][x + 1] & WEST)
                    assert east == west
                if y + 1 < maze.height:
                    south = bool(maze.walls[y][x] & SOUTH)
                    north = bool(maze.walls[y + 1][x] & NORTH)
                    assert south == north


def test_boundary_walls_present_except_exit():
    maze = generate_maze(3, 4, 4)
    for x in range(4):
        assert maze.walls[0][x] & NORTH
        if (x, 3) != maze.exit:
            assert maze.walls[3][x] & SOUTH
    for y in range(4):
        assert maze.walls[y][0] & WEST
        assert maze.walls[y][3] & EAST
    assert not maze.walls[3][3] & SOUTH


# --- solving ---


def test_corridor_maze_path():
    maze = corridor_maze(5)
    assert solve_maze(maze, "bfs") == (DOWN,) * 4


def test_bfs_and_dfs_agree_on_perfect_mazes():
    for seed in range(30):
        maze = generate_maze(seed, 5, 5)
        bfs = solve_maze(maze, "bfs")
        dfs = solve_maze(maze, "dfs")
        assert bfs == dfs
        assert validate_path(maze, bfs).ok


def test_bfs_length_matches_exhaustive_minimum():
    for seed in range(30):
        maze = generate_maze(seed, 5, 5)
        lengths = all_simple_path_lengths(maze)
        assert len(lengths) == 1  # trees have exactly one simple path
        assert len(solve_maze(maze, "bfs")) == min(lengths)


def test_solve_rejects_bad_strategy():
    with pytest.raises(ValueError):
        solve_maze(generate_maze(1, 2, 2), "astar")


# --- path validation ---


def test_validate_solver_output():
    maze = generate_maze(9, 4, 4)
    assert validate_path(maze, solve_maze(maze, "bfs")).ok


def test_validate_empty_path_wrong_endpoint():
    verdict = validate_path(generate_maze(1, 2, 2), ())
    assert verdict.kind == "wrong_endpoint"
    assert verdict.cell == (0, 0)


def test_validate_wall_crossing_reported_at_first_step():
    maze = generate_maze(1, 2, 2)
    verdict = validate_path(maze, (UP,))  # entry always has its north wall
    assert verdict.kind == "wall_crossed"
    assert verdict.step_index == 0


def test_path_prefix_length():
    maze = generate_maze(9, 4, 4)
    path = solve_maze(maze, "bfs")
    assert path_prefix_length(maze, path) == len(path)
    assert path_prefix_length(maze, path[:-1]) == len(path) - 1
    assert path_prefix_length(maze, (UP,) + path) == 0


# --- rendering ---


def test_render_two_by_two_geometry():
    lines = render_maze(generate_maze(2, 2, 2)).split("\n")
    assert len(lines) == 5
    assert all(len(line) == 9 for line in lines)


def test_render_alphabet_without_path():
    text = render_maze(generate_maze(4, 5, 5))
    assert set(text) <= set("+-| \n")


def test_render_marks_entry_and_steps():
    maze = generate_maze(6, 4, 4)
    path = solve_maze(maze, "bfs")
    text = render_maze(maze, path)
    assert text.count("**") == 1
    arrows = sum(text.count(tok) for tok in (UP, RIGHT, DOWN, LEFT))
    assert arrows == len(path)


def test_render_rejects_invalid_path():
    maze = generate_maze(6, 4, 4)
    with pytest.raises(InvalidPathError):
        render_maze(maze, (UP, UP))


def test_round_trip_unsolved_and_solved():
    for seed in range(60):
        width, height = [(4, 4), (5, 5), (6, 6)][seed % 3]
        maze = generate_maze(seed, width, height)
        path = solve_maze(maze, "bfs")
        for p in (None, path):
            text = render_maze(maze, p)
            parsed_maze, parsed_path = parse_maze(text)
            assert parsed_maze == maze
            assert parsed_path == p
            assert render_maze(parsed_maze, parsed_path) == text


def test_parse_trailing_whitespace_tolerated():
    maze = generate_maze(11, 4, 4)
    text = render_maze(maze)
    padded = "\n".join(line + "  " for line in text.split("\n")) + "\n"
    parsed, _ = parse_maze(padded)
    assert parsed == maze


def test_parse_geometry_error_where_plus_expected():
    text = render_maze(generate_maze(2, 2, 2))
    broken = "-" + text[1:]
    with pytest.raises(MazeGeometryError) as exc:
        parse_maze(broken)
    assert exc.value.line == 1


def test_parse_unknown_token():
    maze = generate_maze(2, 2, 2)
    lines = render_maze(maze).split("\n")
    lines[1] = lines[1][0] + "@@ " + lines[1][4:]
    with pytest.raises(MazeTokenError):
        parse_maze("\n".join(lines))


def test_parse_dangling_path_after_deleting_an_arrow():
    maze = generate_maze(13, 4, 4)
    path = solve_maze(maze, "bfs")
    text = render_maze(maze, path)
    # blank out the first step's arrow cell; the rest becomes unreachable
    token = path[0].center(3)
    broken = text.replace(token, "   ", 1)
    with pytest.raises(DanglingPathError):
        parse_maze(broken)


def test_parse_arrows_without_entry_mark():
    maze = generate_maze(13, 4, 4)
    path = solve_maze(maze, "bfs")
    text = render_maze(maze, path).replace("**", "  ", 1)
    with pytest.raises(DanglingPathError):
        parse_maze(text)
