import os


def data_path(name):
    here = os.path.dirname(__file__)
    return os.path.join(here, "..", "src", "corkatlas", "data", name)
