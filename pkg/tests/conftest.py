import hypothesis

hypothesis.settings.register_profile("treehopf", deadline=None)
hypothesis.settings.load_profile("treehopf")
