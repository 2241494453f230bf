from knotmosaics.mosaic import Mosaic
from knotmosaics.render import render_mosaic
from knotmosaics.tiles import ALL_TILES, Side, connection_points


def _cell(tile):
    return render_mosaic(Mosaic.from_rows([[tile]])).splitlines()


def test_blank_tile():
    assert _cell(0) == ["   ", "   ", "   "]


def test_vertical_line():
    assert _cell(6) == [" | ", " | ", " | "]


def test_strands_meet_edges_exactly_at_connection_points():
    # edge midpoints: top (0,1), left (1,0), right (1,2), bottom (2,1)
    for tile in ALL_TILES:
        art = _cell(tile)
        cp = connection_points(tile)
        assert (art[0][1] != " ") == (Side.TOP in cp)
        assert (art[1][0] != " ") == (Side.LEFT in cp)
        assert (art[1][2] != " ") == (Side.RIGHT in cp)
        assert (art[2][1] != " ") == (Side.BOTTOM in cp)


def test_crossings_break_the_under_strand():
    # vertical-over: unbroken centre column, horizontal gap at the centre
    over_v = _cell(9)
    assert over_v[0][1] == over_v[1][1] == over_v[2][1] == "|"
    # horizontal-over: unbroken middle row, vertical gap at the centre
    over_h = _cell(10)
    assert over_h[1] == "---"
    assert over_h[0][1] == over_h[2][1] == "|"
    assert over_v != over_h


def test_four_point_tiles_render_distinctly():
    cells = {tile: tuple(_cell(tile)) for tile in (7, 8, 9, 10)}
    assert len(set(cells.values())) == 4


def test_circle_has_clean_border():
    art = render_mosaic(Mosaic.from_rows([[2, 1], [3, 4]])).splitlines()
    assert len(art) == 6
    assert all(len(line) == 6 for line in art)
    # outer frame of the drawing carries no strand characters
    assert art[0].strip() == "" and art[-1].strip() == ""
    assert all(line[0] == " " and line[-1] == " " for line in art)
    # but the drawing is not empty
    assert any(ch != " " for line in art for ch in line)
