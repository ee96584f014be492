from .small_graphs import atlas_graphs, labelled_graphs, named_graph
