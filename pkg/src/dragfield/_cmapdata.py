"""Fixed warm-to-cool colormap for scalar (depth/distance) visualization.

Index 0 is the warmest color (closest), index 255 the coolest (farthest).
"""

WARM_COOL = (
    (0.9, 0.17, 0.08),
    (0.901412, 0.175961, 0.080314),
    (0.902824, 0.181922, 0.080627),
    (0.904235, 0.187882, 0.080941),
    (0.905647, 0.193843, 0.081255),
    (0.907059, 0.199804, 0.081569),
    (0.908471, 0.205765, 0.081882),
    (0.909882, 0.211725, 0.082196),
    (0.911294, 0.217686, 0.08251),
    (0.912706, 0.223647, 0.082824),
    (0.914118, 0.229608, 0.083137),
    (0.915529, 0.235569, 0.083451),
    (0.916941, 0.241529, 0.083765),
    (0.918353, 0.24749, 0.084078),
    (0.919765, 0.253451, 0.084392),
    (0.921176, 0.259412, 0.084706),
    (0.922588, 0.265373, 0.08502),
    (0.924, 0.271333, 0.085333),
    (0.925412, 0.277294, 0.085647),
    (0.926824, 0.283255, 0.085961),
    (0.928235, 0.289216, 0.086275),
    (0.929647, 0.295176, 0.086588),
    (0.931059, 0.301137, 0.086902),
    (0.932471, 0.307098, 0.087216),
    (0.933882, 0.313059, 0.087529),
    (0.935294, 0.31902, 0.087843),
    (0.936706, 0.32498, 0.088157),
    (0.938118, 0.330941, 0.088471),
    (0.939529, 0.336902, 0.088784),
    (0.940941, 0.342863, 0.089098),
    (0.942353, 0.348824, 0.089412),
    (0.943765, 0.354784, 0.089725),
    (0.945176, 0.360745, 0.090039),
    (0.946588, 0.366706, 0.090353),
    (0.948, 0.372667, 0.090667),
    (0.949412, 0.378627, 0.09098),
    (0.950824, 0.384588, 0.091294),
    (0.952235, 0.390549, 0.091608),
    (0.953647, 0.39651, 0.091922),
    (0.955059, 0.402471, 0.092235),
    (0.956471, 0.408431, 0.092549),
    (0.957882, 0.414392, 0.092863),
    (0.959294, 0.420353, 0.093176),
    (0.960706, 0.426314, 0.09349),
    (0.962118, 0.432275, 0.093804),
    (0.963529, 0.438235, 0.094118),
    (0.964941, 0.444196, 0.094431),
    (0.966353, 0.450157, 0.094745),
    (0.967765, 0.456118, 0.095059),
    (0.969176, 0.462078, 0.095373),
    (0.970588, 0.468039, 0.095686),
    (0.972, 0.474, 0.096),
    (0.973412, 0.479961, 0.096314),
    (0.974824, 0.485922, 0.096627),
    (0.976235, 0.491882, 0.096941),
    (0.977647, 0.497843, 0.097255),
    (0.979059, 0.503804, 0.097569),
    (0.980471, 0.509765, 0.097882),
    (0.981882, 0.515725, 0.098196),
    (0.983294, 0.521686, 0.09851),
    (0.984706, 0.527647, 0.098824),
    (0.986118, 0.533608, 0.099137),
    (0.987529, 0.539569, 0.099451),
    (0.988941, 0.545529, 0.099765),
    (0.989961, 0.551333, 0.101765),
    (0.989804, 0.556667, 0.108824),
    (0.989647, 0.562, 0.115882),
    (0.98949, 0.567333, 0.122941),
    (0.989333, 0.572667, 0.13),
    (0.989176, 0.578, 0.137059),
    (0.98902, 0.583333, 0.144118),
    (0.988863, 0.588667, 0.151176),
    (0.988706, 0.594, 0.158235),
    (0.988549, 0.599333, 0.165294),
    (0.988392, 0.604667, 0.172353),
    (0.988235, 0.61, 0.179412),
    (0.988078, 0.615333, 0.186471),
    (0.987922, 0.620667, 0.193529),
    (0.987765, 0.626, 0.200588),
    (0.987608, 0.631333, 0.207647),
    (0.987451, 0.636667, 0.214706),
    (0.987294, 0.642, 0.221765),
    (0.987137, 0.647333, 0.228824),
    (0.98698, 0.652667, 0.235882),
    (0.986824, 0.658, 0.242941),
    (0.986667, 0.663333, 0.25),
    (0.98651, 0.668667, 0.257059),
    (0.986353, 0.674, 0.264118),
    (0.986196, 0.679333, 0.271176),
    (0.986039, 0.684667, 0.278235),
    (0.985882, 0.69, 0.285294),
    (0.985725, 0.695333, 0.292353),
    (0.985569, 0.700667, 0.299412),
    (0.985412, 0.706, 0.306471),
    (0.985255, 0.711333, 0.313529),
    (0.985098, 0.716667, 0.320588),
    (0.984941, 0.722, 0.327647),
    (0.984784, 0.727333, 0.334706),
    (0.984627, 0.732667, 0.341765),
    (0.984471, 0.738, 0.348824),
    (0.984314, 0.743333, 0.355882),
    (0.984157, 0.748667, 0.362941),
    (0.984, 0.754, 0.37),
    (0.983843, 0.759333, 0.377059),
    (0.983686, 0.764667, 0.384118),
    (0.983529, 0.77, 0.391176),
    (0.983373, 0.775333, 0.398235),
    (0.983216, 0.780667, 0.405294),
    (0.983059, 0.786, 0.412353),
    (0.982902, 0.791333, 0.419412),
    (0.982745, 0.796667, 0.426471),
    (0.982588, 0.802, 0.433529),
    (0.982431, 0.807333, 0.440588),
    (0.982275, 0.812667, 0.447647),
    (0.982118, 0.818, 0.454706),
    (0.981961, 0.823333, 0.461765),
    (0.981804, 0.828667, 0.468824),
    (0.981647, 0.834, 0.475882),
    (0.98149, 0.839333, 0.482941),
    (0.981333, 0.844667, 0.49),
    (0.981176, 0.85, 0.497059),
    (0.98102, 0.855333, 0.504118),
    (0.980863, 0.860667, 0.511176),
    (0.980706, 0.866, 0.518235),
    (0.980549, 0.871333, 0.525294),
    (0.980392, 0.876667, 0.532353),
    (0.980235, 0.882, 0.539412),
    (0.980078, 0.887333, 0.546471),
    (0.97702, 0.889373, 0.552667),
    (0.971059, 0.888118, 0.558),
    (0.965098, 0.886863, 0.563333),
    (0.959137, 0.885608, 0.568667),
    (0.953176, 0.884353, 0.574),
    (0.947216, 0.883098, 0.579333),
    (0.941255, 0.881843, 0.584667),
    (0.935294, 0.880588, 0.59),
    (0.929333, 0.879333, 0.595333),
    (0.923373, 0.878078, 0.600667),
    (0.917412, 0.876824, 0.606),
    (0.911451, 0.875569, 0.611333),
    (0.90549, 0.874314, 0.616667),
    (0.899529, 0.873059, 0.622),
    (0.893569, 0.871804, 0.627333),
    (0.887608, 0.870549, 0.632667),
    (0.881647, 0.869294, 0.638),
    (0.875686, 0.868039, 0.643333),
    (0.869725, 0.866784, 0.648667),
    (0.863765, 0.865529, 0.654),
    (0.857804, 0.864275, 0.659333),
    (0.851843, 0.86302, 0.664667),
    (0.845882, 0.861765, 0.67),
    (0.839922, 0.86051, 0.675333),
    (0.833961, 0.859255, 0.680667),
    (0.828, 0.858, 0.686),
    (0.822039, 0.856745, 0.691333),
    (0.816078, 0.85549, 0.696667),
    (0.810118, 0.854235, 0.702),
    (0.804157, 0.85298, 0.707333),
    (0.798196, 0.851725, 0.712667),
    (0.792235, 0.850471, 0.718),
    (0.786275, 0.849216, 0.723333),
    (0.780314, 0.847961, 0.728667),
    (0.774353, 0.846706, 0.734),
    (0.768392, 0.845451, 0.739333),
    (0.762431, 0.844196, 0.744667),
    (0.756471, 0.842941, 0.75),
    (0.75051, 0.841686, 0.755333),
    (0.744549, 0.840431, 0.760667),
    (0.738588, 0.839176, 0.766),
    (0.732627, 0.837922, 0.771333),
    (0.726667, 0.836667, 0.776667),
    (0.720706, 0.835412, 0.782),
    (0.714745, 0.834157, 0.787333),
    (0.708784, 0.832902, 0.792667),
    (0.702824, 0.831647, 0.798),
    (0.696863, 0.830392, 0.803333),
    (0.690902, 0.829137, 0.808667),
    (0.684941, 0.827882, 0.814),
    (0.67898, 0.826627, 0.819333),
    (0.67302, 0.825373, 0.824667),
    (0.667059, 0.824118, 0.83),
    (0.661098, 0.822863, 0.835333),
    (0.655137, 0.821608, 0.840667),
    (0.649176, 0.820353, 0.846),
    (0.643216, 0.819098, 0.851333),
    (0.637255, 0.817843, 0.856667),
    (0.631294, 0.816588, 0.862),
    (0.625333, 0.815333, 0.867333),
    (0.619373, 0.814078, 0.872667),
    (0.613412, 0.812824, 0.878),
    (0.607451, 0.811569, 0.883333),
    (0.60149, 0.810314, 0.888667),
    (0.594353, 0.804471, 0.888706),
    (0.586824, 0.797098, 0.88698),
    (0.579294, 0.789725, 0.885255),
    (0.571765, 0.782353, 0.883529),
    (0.564235, 0.77498, 0.881804),
    (0.556706, 0.767608, 0.880078),
    (0.549176, 0.760235, 0.878353),
    (0.541647, 0.752863, 0.876627),
    (0.534118, 0.74549, 0.874902),
    (0.526588, 0.738118, 0.873176),
    (0.519059, 0.730745, 0.871451),
    (0.511529, 0.723373, 0.869725),
    (0.504, 0.716, 0.868),
    (0.496471, 0.708627, 0.866275),
    (0.488941, 0.701255, 0.864549),
    (0.481412, 0.693882, 0.862824),
    (0.473882, 0.68651, 0.861098),
    (0.466353, 0.679137, 0.859373),
    (0.458824, 0.671765, 0.857647),
    (0.451294, 0.664392, 0.855922),
    (0.443765, 0.65702, 0.854196),
    (0.436235, 0.649647, 0.852471),
    (0.428706, 0.642275, 0.850745),
    (0.421176, 0.634902, 0.84902),
    (0.413647, 0.627529, 0.847294),
    (0.406118, 0.620157, 0.845569),
    (0.398588, 0.612784, 0.843843),
    (0.391059, 0.605412, 0.842118),
    (0.383529, 0.598039, 0.840392),
    (0.376, 0.590667, 0.838667),
    (0.368471, 0.583294, 0.836941),
    (0.360941, 0.575922, 0.835216),
    (0.353412, 0.568549, 0.83349),
    (0.345882, 0.561176, 0.831765),
    (0.338353, 0.553804, 0.830039),
    (0.330824, 0.546431, 0.828314),
    (0.323294, 0.539059, 0.826588),
    (0.315765, 0.531686, 0.824863),
    (0.308235, 0.524314, 0.823137),
    (0.300706, 0.516941, 0.821412),
    (0.293176, 0.509569, 0.819686),
    (0.285647, 0.502196, 0.817961),
    (0.278118, 0.494824, 0.816235),
    (0.270588, 0.487451, 0.81451),
    (0.263059, 0.480078, 0.812784),
    (0.255529, 0.472706, 0.811059),
    (0.248, 0.465333, 0.809333),
    (0.240471, 0.457961, 0.807608),
    (0.232941, 0.450588, 0.805882),
    (0.225412, 0.443216, 0.804157),
    (0.217882, 0.435843, 0.802431),
    (0.210353, 0.428471, 0.800706),
    (0.202824, 0.421098, 0.79898),
    (0.195294, 0.413725, 0.797255),
    (0.187765, 0.406353, 0.795529),
    (0.180235, 0.39898, 0.793804),
    (0.172706, 0.391608, 0.792078),
    (0.165176, 0.384235, 0.790353),
    (0.157647, 0.376863, 0.788627),
    (0.150118, 0.36949, 0.786902),
    (0.142588, 0.362118, 0.785176),
    (0.135059, 0.354745, 0.783451),
    (0.127529, 0.347373, 0.781725),
    (0.12, 0.34, 0.78),
)
