"""
Prints the closed-form inverse of a Jordan cell and the Jordan form of that inverse.
"""
from kloc import JordanCell, cell_inverse, jordan_decompose
from kloc.gaussq import gq_parse

if __name__ == '__main__':
    cell = JordanCell(4, gq_parse('1+i'))
    inv = cell_inverse(cell)

    for row in inv.to_rows():
        print(' '.join('{:>10}'.format(value) for value in row))

    # The inverse is a single cell of the inverse eigenvalue.
    print(jordan_decompose(inv, [cell.eigenvalue.inverse()]))
