"""
Computes K1 classes of a few cell sums and shows the relations between them.
"""
from kloc import JordanForm, k1_add, k1_class, k1_neg
from kloc.jordan import compose, form_spectrum
from kloc.ktheory import k1_order

if __name__ == '__main__':
    forms = {
        'J(1, 1)': JordanForm({(1, 1): 1}),
        'J(2, -1)': JordanForm({(2, -1): 1}),
        '3 J(1, 2) + J(1, 1/2)': JordanForm({(1, 2): 3, (1, '1/2'): 1}),
        'J(2, i) + J(2, -i)': JordanForm({(2, 'i'): 1, (2, '-i'): 1}),
    }
    classes = {}
    for name, f in forms.items():
        x = k1_class(compose(f), form_spectrum(f))
        classes[name] = x
        print('{:<24} {!r:<40} order {}'.format(name, x, k1_order(x)))

    torsion = classes['J(2, -1)']
    print('2 [J(2, -1)] =', k1_add(torsion, torsion))
    free = classes['3 J(1, 2) + J(1, 1/2)']
    print('-(3 J(1, 2) + J(1, 1/2)) =', k1_neg(free))
